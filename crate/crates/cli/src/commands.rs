//! Subcommand implementations. Every command yields both a human rendering
//! and a canonical JSON value; the caller picks one. Checked mathematical
//! properties that come out false are assertion failures, reported separately
//! from input or bound errors.

use serde::Serialize;
use std::fmt::Write as _;

use bluepoint_core::category::{
    counit_blueprint, find_isomorphism, hom_count_into_counit, rho_hom_count, semiring_hom_count,
    sigma_hom_count, tensor_b, FiniteBObject, FiniteSemiring,
};
use bluepoint_core::blueprint::{Blueprint, CoefficientRing};
use bluepoint_core::presentation::MonoidPresentation;
use bluepoint_core::scheme::{
    p_polynomial, point_label, psi1_injectivity, psi2_point_sets, FIELD_NOTE,
};
use bluepoint_core::zeta::rational_guess;
use bluepoint_core::{
    check_q_le_p, deitmar_zeta, hom_b, hom_count_abelian, points, q_count, sample_p,
    AbelianGroupStructure, Error as CoreError, F1SchemeWithRelations, ZetaMode,
};
use num_rational::BigRational;
use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::build::{self, bobject_to_doc, document_scheme};
use crate::doc::{parse_document, serialize_document, DocError, Document};

/// What one command produced: both renderings plus whether any asserted
/// property failed (exit code 1).
pub struct CmdOutput {
    pub text: String,
    pub json: serde_json::Value,
    pub failed_assertion: bool,
}

pub enum CliError {
    /// Unreadable file, malformed JSON, schema or semantic document problem.
    Input(String),
    /// A core computation refused: bound exceeded, saturation incomplete, cap hit.
    Bound(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Bound(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) => m,
            CliError::Bound(m) => m,
        }
    }
}

impl From<DocError> for CliError {
    fn from(e: DocError) -> Self {
        if e.bound_related {
            CliError::Bound(e.message)
        } else {
            CliError::Input(e.message)
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::BoundTooSmall { .. }
            | CoreError::BoundExceeded { .. }
            | CoreError::SaturationIncomplete(_)
            | CoreError::CapExceeded { .. }
            | CoreError::Overflow(_) => CliError::Bound(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

fn read_document(path: &str) -> Result<Document, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{path}: {e}")))?;
    parse_document(&text).map_err(|e| CliError::Input(format!("{path}: {e}")))
}

/// `"a..b"` (inclusive) or a single value; values start at 1.
pub fn parse_range(s: &str) -> Result<Vec<u64>, CliError> {
    let bad = || CliError::Input(format!("bad range `{s}`; expected forms: `3` or `1..4`"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse::<u64>().map_err(|_| bad())?,
                         b.trim().parse::<u64>().map_err(|_| bad())?),
        None => {
            let v = s.trim().parse::<u64>().map_err(|_| bad())?;
            (v, v)
        }
    };
    if a == 0 || b < a {
        return Err(bad());
    }
    Ok((a..=b).collect())
}

fn unit_display(u: &AbelianGroupStructure) -> String {
    let mut parts = Vec::new();
    match u.rank {
        0 => {}
        1 => parts.push("Z".to_string()),
        r => parts.push(format!("Z^{r}")),
    }
    for d in &u.invariant_factors {
        parts.push(format!("Z/{d}"));
    }
    if parts.is_empty() {
        "trivial".to_string()
    } else {
        parts.join(" x ")
    }
}

fn rational_display(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

// ---------------------------------------------------------------- spec ----

#[derive(Serialize)]
struct PointRow {
    label: String,
    chart: usize,
    prime: String,
    unit_group: String,
    unit_rank: usize,
    invariant_factors: Vec<u64>,
    torsion_free: bool,
    identified_with: Vec<String>,
}

#[derive(Serialize)]
struct SpecReport {
    kind: String,
    point_count: usize,
    points: Vec<PointRow>,
}

pub fn cmd_spec(file: &str, degree_bound: Option<u32>) -> Result<CmdOutput, CliError> {
    let doc = read_document(file)?;
    let scheme = document_scheme(&doc, degree_bound)?;
    let pts = points(&scheme)?;
    let rows: Vec<PointRow> = pts
        .iter()
        .map(|p| PointRow {
            label: point_label(&scheme, p),
            chart: p.chart,
            prime: p.prime.display(&scheme.charts[p.chart].monoid().generators),
            unit_group: unit_display(&p.unit_structure),
            unit_rank: p.unit_structure.rank,
            invariant_factors: p.unit_structure.invariant_factors.clone(),
            torsion_free: p.unit_structure.is_torsion_free(),
            identified_with: p
                .identified_with
                .iter()
                .map(|(c, pr)| {
                    format!("chart{c}:{}", pr.display(&scheme.charts[*c].monoid().generators))
                })
                .collect(),
        })
        .collect();
    let mut text = format!("{} point{}\n", rows.len(), if rows.len() == 1 { "" } else { "s" });
    for r in &rows {
        let _ = writeln!(
            text,
            "  {:<18} unit group {:<12} {}",
            r.label,
            r.unit_group,
            if r.torsion_free { "torsion-free" } else { "has torsion" }
        );
        if r.identified_with.len() > 1 {
            let _ = writeln!(text, "    identified: {}", r.identified_with.join(" = "));
        }
    }
    let report = SpecReport { kind: doc.kind().to_string(), point_count: rows.len(), points: rows };
    Ok(CmdOutput {
        text,
        json: serde_json::to_value(&report).expect("report serialization"),
        failed_assertion: false,
    })
}

// --------------------------------------------------------------- count ----

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum CountMode {
    P,
    Q,
    Both,
}

#[derive(Serialize)]
struct CountRow {
    n: u64,
    /// `label -> count` (single mode) or `label -> [q, p]` (both).
    per_point: Vec<(String, Vec<u64>)>,
    totals: Vec<u64>,
    holds: Option<bool>,
}

#[derive(Serialize)]
struct CountReport {
    mode: String,
    columns: Vec<String>,
    rows: Vec<CountRow>,
    polynomial: Option<String>,
    note: Option<String>,
}

fn render_count_table(report: &CountReport) -> String {
    let mut text = String::new();
    let _ = writeln!(text, "mode: {}", report.mode);
    for row in &report.rows {
        let cells: Vec<String> = row
            .per_point
            .iter()
            .map(|(l, v)| {
                let vals: Vec<String> = v.iter().map(u64::to_string).collect();
                format!("{l}={}", vals.join("/"))
            })
            .collect();
        let totals: Vec<String> = row.totals.iter().map(u64::to_string).collect();
        let verdict = match row.holds {
            Some(true) => "  Q<=P holds",
            Some(false) => "  Q<=P FAILS",
            None => "",
        };
        let _ = writeln!(
            text,
            "  n={:<3} {}  total={}{}",
            row.n,
            cells.join("  "),
            totals.join("/"),
            verdict
        );
    }
    if let Some(p) = &report.polynomial {
        let _ = writeln!(text, "polynomial: {p}");
    }
    if let Some(n) = &report.note {
        let _ = writeln!(text, "note: {n}");
    }
    text
}

pub fn cmd_count(
    file: &str,
    mode: CountMode,
    ns: &[u64],
    degree_bound: Option<u32>,
) -> Result<CmdOutput, CliError> {
    let doc = read_document(file)?;
    let scheme = document_scheme(&doc, degree_bound)?;
    let pts = points(&scheme)?;
    let labels: Vec<String> = pts.iter().map(|p| point_label(&scheme, p)).collect();

    let mut failed = false;
    let report = match mode {
        CountMode::Q => {
            let mut rows = Vec::new();
            for &n in ns {
                let r = q_count(&scheme, n)?;
                rows.push(CountRow {
                    n,
                    per_point: labels
                        .iter()
                        .cloned()
                        .zip(r.per_point.iter().map(|&c| vec![c]))
                        .collect(),
                    totals: vec![r.total],
                    holds: None,
                });
            }
            CountReport {
                mode: "Q (compatible morphisms per point)".into(),
                columns: vec!["Q".into()],
                rows,
                polynomial: None,
                note: None,
            }
        }
        CountMode::P => {
            let mut rows = Vec::new();
            for &n in ns {
                let per: Vec<u64> = pts
                    .iter()
                    .map(|p| hom_count_abelian(&p.unit_structure, n))
                    .collect::<Result<_, _>>()?;
                let total = sample_p(&scheme, &[n])?[0].1;
                rows.push(CountRow {
                    n,
                    per_point: labels.iter().cloned().zip(per.iter().map(|&c| vec![c])).collect(),
                    totals: vec![total],
                    holds: None,
                });
            }
            let (polynomial, note) = match p_polynomial(&scheme, ns) {
                Ok((_, poly)) => (Some(poly.display()), None),
                Err(CoreError::NotTorsionFree { point, factors }) => (
                    None,
                    Some(format!(
                        "unit group at {point} has torsion {factors:?}; \
                         the count is polynomial-on-window only, values reported pointwise"
                    )),
                ),
                Err(CoreError::InvalidPresentation(m)) if ns.len() < 2 => {
                    let _ = m;
                    (None, Some("need at least two sample points for a fit".into()))
                }
                Err(e) => return Err(e.into()),
            };
            CountReport {
                mode: "P (unit-group morphism counts per point)".into(),
                columns: vec!["P".into()],
                rows,
                polynomial,
                note,
            }
        }
        CountMode::Both => {
            let margin = check_q_le_p(&scheme, ns)?;
            let mut rows = Vec::new();
            for row in &margin {
                let ok = row.holds();
                failed |= !ok;
                rows.push(CountRow {
                    n: row.n,
                    per_point: row
                        .per_point
                        .iter()
                        .map(|(l, q, p)| (l.clone(), vec![*q, *p]))
                        .collect(),
                    totals: vec![row.total_q, row.total_p],
                    holds: Some(ok),
                });
            }
            CountReport {
                mode: "Q/P margin".into(),
                columns: vec!["Q".into(), "P".into()],
                rows,
                polynomial: None,
                note: None,
            }
        }
    };
    Ok(CmdOutput {
        text: render_count_table(&report),
        json: serde_json::to_value(&report).expect("report serialization"),
        failed_assertion: failed,
    })
}

// ---------------------------------------------------------------- zeta ----

#[derive(Serialize)]
struct RationalGuess {
    numerator: Vec<String>,
    denominator: Vec<String>,
    label: String,
}

#[derive(Serialize)]
struct ZetaReport {
    p: u64,
    order: usize,
    mode: String,
    coefficients: Vec<String>,
    integral: bool,
    rational_guess: Option<RationalGuess>,
    note: Option<String>,
}

pub fn cmd_zeta(
    file: &str,
    p: u64,
    order: usize,
    mode: ZetaMode,
    degree_bound: Option<u32>,
) -> Result<CmdOutput, CliError> {
    let doc = read_document(file)?;
    let scheme = document_scheme(&doc, degree_bound)?;
    let z = deitmar_zeta(&scheme, p, order, mode)?;
    let guess = rational_guess(&z).map(|g| RationalGuess {
        numerator: g.numerator.iter().map(rational_display).collect(),
        denominator: g.denominator.iter().map(rational_display).collect(),
        label: "conjectural: certified only through the truncation order".into(),
    });
    let report = ZetaReport {
        p,
        order,
        mode: match mode {
            ZetaMode::P => "P (unit-group counts)".into(),
            ZetaMode::Q => "Q (compatible-morphism counts, experimental)".into(),
        },
        coefficients: z.coeffs.iter().map(rational_display).collect(),
        integral: z.is_integral(),
        rational_guess: guess,
        note: match mode {
            ZetaMode::Q => {
                Some("experimental: the exponent uses compatible-morphism counts".into())
            }
            ZetaMode::P => None,
        },
    };
    let mut text = format!(
        "zeta series at p = {p}, truncated at T^{order} ({} mode)\n  coefficients: [{}]\n",
        match mode {
            ZetaMode::P => "P",
            ZetaMode::Q => "Q",
        },
        report.coefficients.join(", ")
    );
    if let Some(g) = &report.rational_guess {
        let _ = writeln!(
            text,
            "  rational form ({}):\n    numerator   [{}]\n    denominator [{}]",
            g.label,
            g.numerator.join(", "),
            g.denominator.join(", ")
        );
    }
    if let Some(n) = &report.note {
        let _ = writeln!(text, "  note: {n}");
    }
    Ok(CmdOutput {
        text,
        json: serde_json::to_value(&report).expect("report serialization"),
        failed_assertion: false,
    })
}

// ----------------------------------------------------------------- hom ----

#[derive(Serialize)]
struct HomReport {
    n: u64,
    buckets: Vec<(String, u64)>,
    total: u64,
}

fn document_blueprint(doc: &Document, bound: Option<u32>) -> Result<Blueprint, CliError> {
    match doc {
        Document::Monoid(m) => {
            let pres = build::build_monoid(m, bound)?;
            Ok(Blueprint::pure(pres, CoefficientRing::Nat)?)
        }
        Document::Blueprint(b) => Ok(build::build_blueprint(b, bound)?),
        _ => Err(CliError::Input(
            "hom counting needs an affine document (kind monoid or blueprint)".into(),
        )),
    }
}

pub fn cmd_hom(file: &str, n: u64, degree_bound: Option<u32>) -> Result<CmdOutput, CliError> {
    let doc = read_document(file)?;
    let bp = document_blueprint(&doc, degree_bound)?;
    let buckets = hom_b(&bp, n)?;
    let names = &bp.monoid.generators;
    let report = HomReport {
        n,
        buckets: buckets
            .buckets
            .iter()
            .map(|(prime, homs)| (prime.display(names), homs.len() as u64))
            .collect(),
        total: buckets.total(),
    };
    let mut text = format!(
        "{} compatible morphisms into F1^{n}, bucketed by vanishing prime\n",
        report.total
    );
    for (prime, count) in &report.buckets {
        let _ = writeln!(text, "  {prime:<16} {count}");
    }
    Ok(CmdOutput {
        text,
        json: serde_json::to_value(&report).expect("report serialization"),
        failed_assertion: false,
    })
}

// -------------------------------------------------------------- tensor ----

#[derive(Serialize)]
struct TensorReport {
    carrier_size: usize,
    monoid_order: usize,
    isomorphic_to_left: bool,
    isomorphic_to_right: bool,
    result: crate::doc::BObjectDoc,
}

pub fn cmd_tensor(file1: &str, file2: &str) -> Result<CmdOutput, CliError> {
    let load = |p: &str| -> Result<FiniteBObject, CliError> {
        match read_document(p)? {
            Document::BObject(d) => Ok(build::build_bobject(&d)?),
            other => Err(CliError::Input(format!(
                "{p}: tensor operates on bobject documents, got kind `{}`",
                other.kind()
            ))),
        }
    };
    let a = load(file1)?;
    let b = load(file2)?;
    let t = tensor_b(&a, &b)?;
    let report = TensorReport {
        carrier_size: t.object.carrier_size(),
        monoid_order: t.object.monoid.order(),
        isomorphic_to_left: find_isomorphism(&t.object, &a).is_some(),
        isomorphic_to_right: find_isomorphism(&t.object, &b).is_some(),
        result: bobject_to_doc(&t.object),
    };
    let doc_text = serialize_document(&Document::BObject(report.result.clone()));
    let text = format!(
        "tensor product: carrier {} points, monoid order {}\n{}",
        report.carrier_size, report.monoid_order, doc_text
    );
    Ok(CmdOutput {
        text,
        json: serde_json::to_value(&report).expect("report serialization"),
        failed_assertion: false,
    })
}

// -------------------------------------------------------- adjoint-check ----

#[derive(Serialize)]
struct AdjointSide {
    pairs: usize,
    matches: usize,
    percent: u32,
    mismatches: Vec<String>,
}

#[derive(Serialize)]
struct AdjointReport {
    suite: String,
    seed: Option<u64>,
    reduction_counit: AdjointSide,
    forget_attach: AdjointSide,
}

fn fixture_blueprints(full: bool) -> Vec<(String, Blueprint)> {
    let bp = |name: &str, m: MonoidPresentation, ring, rels: Vec<&str>| {
        let relations = rels
            .iter()
            .map(|r| crate::parse::parse_poly_relation(r, &m.generators, name).expect("fixture"))
            .collect();
        (name.to_string(), Blueprint::new(m, ring, relations).expect("fixture"))
    };
    let free = |names: &[&str], bound| MonoidPresentation::free(names, bound);
    let pres = |gens: &[&str], rels: &[(&str, &str)], bound| {
        let g: Vec<String> = gens.iter().map(|s| s.to_string()).collect();
        let relations = rels
            .iter()
            .map(|(l, r)| {
                (
                    crate::parse::parse_monomial(l, &g, "fixture").expect("fixture"),
                    crate::parse::parse_monomial(r, &g, "fixture").expect("fixture"),
                )
            })
            .collect();
        MonoidPresentation::new(g, relations, bound).expect("fixture")
    };

    let mut out = vec![
        bp("free T", free(&["T"], 6), CoefficientRing::Nat, vec![]),
        bp("free S,T", free(&["S", "T"], 5), CoefficientRing::Nat, vec![]),
        bp("S*T = 0", pres(&["S", "T"], &[("S*T", "0")], 6), CoefficientRing::Nat, vec![]),
        bp("U^3 = 1", pres(&["U"], &[("U^3", "1")], 6), CoefficientRing::Nat, vec![]),
        bp(
            "T^2 = T with 1 + T = T",
            pres(&["T"], &[("T^2", "T")], 6),
            CoefficientRing::Nat,
            vec!["1 + T = T"],
        ),
        bp(
            "T1 + T2 = T3 + T4",
            free(&["T1", "T2", "T3", "T4"], 4),
            CoefficientRing::Nat,
            vec!["T1 + T2 = T3 + T4"],
        ),
        bp("2*T = 1", free(&["T"], 6), CoefficientRing::Nat, vec!["2*T = 1"]),
    ];
    if full {
        out.push(bp("free A,B,C", free(&["A", "B", "C"], 4), CoefficientRing::Nat, vec![]));
        out.push(bp(
            "det = 1",
            free(&["T1", "T2", "T3", "T4"], 6),
            CoefficientRing::Int,
            vec!["T1*T4 = T2*T3 + 1"],
        ));
    }
    out
}

fn fixture_monoids(full: bool) -> Vec<(String, MonoidPresentation)> {
    let pres = |name: &str, gens: &[&str], rels: &[(&str, &str)], bound| {
        let g: Vec<String> = gens.iter().map(|s| s.to_string()).collect();
        let relations = rels
            .iter()
            .map(|(l, r)| {
                (
                    crate::parse::parse_monomial(l, &g, "fixture").expect("fixture"),
                    crate::parse::parse_monomial(r, &g, "fixture").expect("fixture"),
                )
            })
            .collect();
        (name.to_string(), MonoidPresentation::new(g, relations, bound).expect("fixture"))
    };
    let mut out = vec![
        pres("U^3 = 1", &["U"], &[("U^3", "1")], 8),
        pres("T^2 = T", &["T"], &[("T^2", "T")], 8),
        pres("V^2 = 1", &["V"], &[("V^2", "1")], 8),
        pres("W^4 = W^2", &["W"], &[("W^4", "W^2")], 8),
    ];
    if full {
        out.push(pres("A^2 = 1, B^2 = B", &["A", "B"], &[("A^2", "1"), ("B^2", "B")], 6));
        out.push(pres("U^6 = 1", &["U"], &[("U^6", "1")], 10));
    }
    out
}

fn finite_targets(full: bool) -> Vec<(String, Blueprint)> {
    let mut out: Vec<(String, Blueprint)> = fixture_monoids(full)
        .into_iter()
        .map(|(name, m)| {
            (format!("sigma({name})"), Blueprint::pure(m, CoefficientRing::Nat).expect("fixture"))
        })
        .collect();
    for r in FiniteSemiring::small_library() {
        out.push((
            format!("counit blueprint, order {}", r.order()),
            counit_blueprint(&r).expect("fixture"),
        ));
    }
    out
}

/// Seeded extra instances: single-generator monoids `W^a = W^b` (finite for
/// `a > b`) paired with random finite targets.
fn random_monoids(seed: u64, count: usize) -> Vec<(String, MonoidPresentation)> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let a: u32 = rng.gen_range(2..=5);
            let b: u32 = rng.gen_range(0..a);
            let g = vec!["W".to_string()];
            let rel = (
                bluepoint_core::Monomial::Term(vec![a]),
                bluepoint_core::Monomial::Term(vec![b]),
            );
            (
                format!("seeded {i}: W^{a} = W^{b}"),
                MonoidPresentation::new(g, vec![rel], 2 * a.max(4)).expect("finite by a > b"),
            )
        })
        .collect()
}

pub fn cmd_adjoint_check(
    suite: &str,
    seed: Option<u64>,
) -> Result<CmdOutput, CliError> {
    let full = match suite {
        "small" => false,
        "full" => true,
        other => {
            return Err(CliError::Input(format!(
                "unknown suite `{other}`; expected small or full"
            )))
        }
    };

    // Reduction ⊣ counit: semiring morphisms out of the reduction equal
    // blueprint morphisms into the counit object.
    let blueprints = fixture_blueprints(full);
    let semirings = FiniteSemiring::small_library();
    let mut fg = AdjointSide { pairs: 0, matches: 0, percent: 0, mismatches: Vec::new() };
    for (bname, bp) in &blueprints {
        for r in &semirings {
            let lhs = semiring_hom_count(bp, r)?;
            let rhs = hom_count_into_counit(bp, r)?;
            fg.pairs += 1;
            if lhs == rhs {
                fg.matches += 1;
            } else {
                fg.mismatches.push(format!(
                    "{bname} vs semiring of order {}: {lhs} != {rhs}",
                    r.order()
                ));
            }
        }
    }

    // Forget ⊣ attach-identity-congruence: monoid morphisms into the
    // underlying monoid equal blueprint morphisms out of the pure blueprint.
    let mut sources = fixture_monoids(full);
    if let Some(s) = seed {
        sources.extend(random_monoids(s, 4));
    }
    let targets = finite_targets(full);
    let mut rs = AdjointSide { pairs: 0, matches: 0, percent: 0, mismatches: Vec::new() };
    for (aname, a) in &sources {
        for (tname, b) in &targets {
            let lhs = sigma_hom_count(a, b)?;
            let rhs = rho_hom_count(a, b)?;
            rs.pairs += 1;
            if lhs == rhs {
                rs.matches += 1;
            } else {
                rs.mismatches.push(format!("{aname} vs {tname}: {lhs} != {rhs}"));
            }
        }
    }

    let pct = |s: &AdjointSide| if s.pairs == 0 { 100 } else { (100 * s.matches / s.pairs) as u32 };
    fg.percent = pct(&fg);
    rs.percent = pct(&rs);
    let failed = fg.matches != fg.pairs || rs.matches != rs.pairs;
    let mut text = format!(
        "F⊣G: {}% hom-count matches; ρ⊣σ: {}%\n  F⊣G pairs: {}/{}\n  ρ⊣σ pairs: {}/{}\n",
        fg.percent, rs.percent, fg.matches, fg.pairs, rs.matches, rs.pairs
    );
    for m in fg.mismatches.iter().chain(&rs.mismatches) {
        let _ = writeln!(text, "  MISMATCH {m}");
    }
    let report = AdjointReport {
        suite: suite.to_string(),
        seed,
        reduction_counit: fg,
        forget_attach: rs,
    };
    Ok(CmdOutput {
        text,
        json: serde_json::to_value(&report).expect("report serialization"),
        failed_assertion: failed,
    })
}

// ----------------------------------------------------------------- psi ----

#[derive(Serialize)]
struct PsiChartReport {
    chart: usize,
    source_count: usize,
    image_count: usize,
    /// All comparison-ring points over the field, the codomain of the map.
    target_count: usize,
    injective: bool,
    compatible_count: usize,
    matched_count: usize,
    one_to_one: bool,
}

#[derive(Serialize)]
struct PsiReport {
    q: u64,
    charts: Vec<PsiChartReport>,
    note: String,
}

pub fn cmd_psi(file: &str, q: u64, degree_bound: Option<u32>) -> Result<CmdOutput, CliError> {
    let doc = read_document(file)?;
    let f: F1SchemeWithRelations = match &doc {
        Document::F1swr(d) => build::build_f1swr(d, degree_bound)?,
        Document::Monoid(_) | Document::Blueprint(_) => {
            let bp = document_blueprint(&doc, degree_bound)?;
            F1SchemeWithRelations::identity(&bp)?
        }
        _ => {
            return Err(CliError::Input(
                "the transfer check needs an f1swr document (or an affine one, \
                 compared against itself)"
                    .into(),
            ))
        }
    };
    let target_count = f.cc_ring.points_mod(q)?.len();
    let mut charts = Vec::new();
    let mut failed = false;
    let mut text = String::new();
    for chart in 0..f.scheme.charts.len() {
        let r1 = psi1_injectivity(&f, q, chart)?;
        let r2 = psi2_point_sets(&f, q, chart)?;
        failed |= !r1.injective || !r2.bijective;
        let _ = writeln!(
            text,
            "chart {chart}: Ψ₁ {}: {} ↪ {}",
            if r1.injective { "injective" } else { "NOT injective" },
            r1.source_count,
            target_count
        );
        let _ = writeln!(
            text,
            "chart {chart}: Ψ₂ {}: {} compatible morphisms onto {} field points",
            if r2.bijective { "one-to-one" } else { "NOT one-to-one" },
            r2.left_count,
            r2.right_count
        );
        charts.push(PsiChartReport {
            chart,
            source_count: r1.source_count,
            image_count: r1.image_count,
            target_count,
            injective: r1.injective,
            compatible_count: r2.left_count,
            matched_count: r2.right_count,
            one_to_one: r2.bijective,
        });
    }
    let _ = writeln!(text, "note: {FIELD_NOTE}");
    let report = PsiReport { q, charts, note: FIELD_NOTE.to_string() };
    Ok(CmdOutput {
        text,
        json: serde_json::to_value(&report).expect("report serialization"),
        failed_assertion: failed,
    })
}

// ------------------------------------------------------------------ fmt ----

/// Parse, validate, and reprint a document in canonical bytes.
pub fn cmd_fmt(file: &str) -> Result<CmdOutput, CliError> {
    let doc = read_document(file)?;
    // Validate semantically too, not just the schema.
    match &doc {
        Document::BObject(d) => {
            build::build_bobject(d)?;
        }
        Document::F1swr(d) => {
            build::build_f1swr(d, None)?;
        }
        _ => {
            document_scheme(&doc, None)?;
        }
    }
    let text = serialize_document(&doc);
    let json = serde_json::to_value(&doc).expect("document serialization");
    Ok(CmdOutput { text, json, failed_assertion: false })
}
