use bluepoint_cli::commands::{
    self, parse_range, CliError, CmdOutput, CountMode,
};
use bluepoint_core::ZetaMode;
use clap::{Parser, Subcommand, ValueEnum};

/// Exact computations on pointed-monoid presentations: points, counts, zeta
/// series, hom sets, adjunction suites, tensor products, and prime-field
/// transfer checks.
///
/// Exit codes: 0 ok, 1 an asserted property failed, 2 input error, 3 a
/// degree/size bound was exceeded.
#[derive(Parser)]
#[command(name = "bluepoint", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    P,
    Q,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Small,
    Full,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the points of a presentation with their unit groups.
    Spec {
        file: String,
        #[arg(long)]
        json: bool,
        /// Override every degree bound in the document.
        #[arg(long)]
        degree_bound: Option<u32>,
    },
    /// Point counts over F1^n: unit-group counts (P), compatible-morphism
    /// counts (Q), or the Q<=P margin table (default).
    Count {
        file: String,
        /// P or Q; omit for the margin table comparing both.
        #[arg(long)]
        mode: Option<ModeArg>,
        /// Sample range, e.g. `1..4` (inclusive) or a single value.
        #[arg(long)]
        n: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        degree_bound: Option<u32>,
    },
    /// Truncated zeta series at a prime.
    Zeta {
        file: String,
        #[arg(long)]
        p: u64,
        /// Truncation order (series through T^order).
        #[arg(long, default_value_t = 8)]
        order: usize,
        /// P uses unit-group counts; Q is experimental.
        #[arg(long, value_enum, default_value_t = ModeArg::P)]
        mode: ModeArg,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        degree_bound: Option<u32>,
    },
    /// Compatible morphisms into F1^n, bucketed by vanishing prime.
    Hom {
        file: String,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        degree_bound: Option<u32>,
    },
    /// Verify the two adjunctions by exhaustive hom counting.
    AdjointCheck {
        #[arg(long, value_enum, default_value_t = SuiteArg::Small)]
        suite: SuiteArg,
        /// Adds seeded random instances to the forget/attach suite.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Tensor product of two finite objects; prints a reusable document.
    Tensor {
        file1: String,
        file2: String,
        #[arg(long)]
        json: bool,
    },
    /// Prime-field transfer checks for a scheme with comparison-ring data.
    Psi {
        file: String,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        degree_bound: Option<u32>,
    },
    /// Validate a document and reprint it in canonical form.
    Fmt {
        file: String,
        #[arg(long)]
        json: bool,
    },
}

fn dispatch(cmd: &Cmd) -> Result<(CmdOutput, bool), CliError> {
    match cmd {
        Cmd::Spec { file, json, degree_bound } => {
            Ok((commands::cmd_spec(file, *degree_bound)?, *json))
        }
        Cmd::Count { file, mode, n, json, degree_bound } => {
            let ns = parse_range(n)?;
            let mode = match mode {
                None => CountMode::Both,
                Some(ModeArg::P) => CountMode::P,
                Some(ModeArg::Q) => CountMode::Q,
            };
            Ok((commands::cmd_count(file, mode, &ns, *degree_bound)?, *json))
        }
        Cmd::Zeta { file, p, order, mode, json, degree_bound } => {
            let mode = match mode {
                ModeArg::P => ZetaMode::P,
                ModeArg::Q => ZetaMode::Q,
            };
            Ok((commands::cmd_zeta(file, *p, *order, mode, *degree_bound)?, *json))
        }
        Cmd::Hom { file, n, json, degree_bound } => {
            Ok((commands::cmd_hom(file, *n, *degree_bound)?, *json))
        }
        Cmd::AdjointCheck { suite, seed, json } => {
            let suite = match suite {
                SuiteArg::Small => "small",
                SuiteArg::Full => "full",
            };
            Ok((commands::cmd_adjoint_check(suite, *seed)?, *json))
        }
        Cmd::Tensor { file1, file2, json } => Ok((commands::cmd_tensor(file1, file2)?, *json)),
        Cmd::Psi { file, q, json, degree_bound } => {
            Ok((commands::cmd_psi(file, *q, *degree_bound)?, *json))
        }
        Cmd::Fmt { file, json } => Ok((commands::cmd_fmt(file)?, *json)),
    }
}

fn main() {
    let cli = Cli::parse();
    match dispatch(&cli.cmd) {
        Ok((out, as_json)) => {
            if as_json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("canonical JSON")
                );
            } else {
                print!("{}", out.text);
            }
            std::process::exit(if out.failed_assertion { 1 } else { 0 });
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            std::process::exit(e.exit_code());
        }
    }
}
