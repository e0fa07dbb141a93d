//! The self-describing presentation document format.
//!
//! One JSON object per file with a `kind` discriminant; unknown keys are
//! rejected and syntax/schema errors carry the line and column reported by
//! the JSON parser. Presentations are data; everything numeric (sample
//! ranges, primes, truncation orders) arrives as command-line flags instead.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A document-level error: JSON syntax, schema violation, or a semantic
/// problem found while assembling core objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocError {
    pub message: String,
    /// True when the underlying cause is a degree/size bound, so the caller
    /// can exit 3 instead of 2.
    pub bound_related: bool,
}

impl DocError {
    pub fn new(message: impl Into<String>) -> Self {
        DocError { message: message.into(), bound_related: false }
    }

    pub fn bound(message: impl Into<String>) -> Self {
        DocError { message: message.into(), bound_related: true }
    }
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl std::error::Error for DocError {}

fn json_err(e: serde_json::Error) -> DocError {
    DocError::new(format!("line {}, column {}: {}", e.line(), e.column(), e))
}

fn default_bound() -> u32 {
    8
}

fn default_coefficients() -> String {
    "N".to_string()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidDoc {
    pub kind: String,
    pub generators: Vec<String>,
    /// Monomial identities, e.g. `"S*T = 0"` or `"U^3 = 1"`.
    #[serde(default)]
    pub relations: Vec<String>,
    #[serde(default = "default_bound")]
    pub degree_bound: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlueprintDoc {
    pub kind: String,
    /// `"N"` for natural-number coefficients, `"Z"` for integers.
    #[serde(default = "default_coefficients")]
    pub coefficients: String,
    pub generators: Vec<String>,
    #[serde(default)]
    pub monoid_relations: Vec<String>,
    /// Formal-sum identities, e.g. `"T1*T4 = T2*T3 + 1"`.
    #[serde(default)]
    pub relations: Vec<String>,
    #[serde(default = "default_bound")]
    pub degree_bound: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChartDoc {
    pub name: String,
    #[serde(default = "default_coefficients")]
    pub coefficients: String,
    pub generators: Vec<String>,
    #[serde(default)]
    pub monoid_relations: Vec<String>,
    #[serde(default)]
    pub relations: Vec<String>,
    #[serde(default = "default_bound")]
    pub degree_bound: u32,
}

/// Charts are identified along localizations. The primes are generator-name
/// lists; `forward` sends each generator of the left chart to a monomial over
/// the localized right chart, where the inverse of a generator `X` outside
/// the prime is written `X^-1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GluingDoc {
    pub left: String,
    pub right: String,
    #[serde(default)]
    pub left_prime: Vec<String>,
    #[serde(default)]
    pub right_prime: Vec<String>,
    pub forward: std::collections::BTreeMap<String, String>,
    pub backward: std::collections::BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemeDoc {
    pub kind: String,
    pub charts: Vec<ChartDoc>,
    #[serde(default)]
    pub gluings: Vec<GluingDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingDoc {
    pub generators: Vec<String>,
    /// Polynomial identities over the integers, e.g. `"A*D = B*C + 1"`.
    #[serde(default)]
    pub relations: Vec<String>,
}

/// A scheme plus a comparison ring mapped into every chart's monoid ring:
/// the data behind the prime-field transfer checks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct F1swrDoc {
    pub kind: String,
    pub charts: Vec<ChartDoc>,
    #[serde(default)]
    pub gluings: Vec<GluingDoc>,
    pub comparison_ring: RingDoc,
    /// One map per chart: comparison-ring generator name → formal sum over
    /// that chart's generators.
    pub chart_images: Vec<std::collections::BTreeMap<String, String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AddTableDoc {
    /// Element names; index 0 is the neutral element.
    pub names: Vec<String>,
    /// Symmetric addition table; `null` marks a sum that is not representable
    /// in the truncated table.
    pub add: Vec<Vec<Option<usize>>>,
}

/// A finite object of the monoidal category: pointed carrier, additive
/// monoid, and the embedding of the non-basepoint carrier elements.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BObjectDoc {
    pub kind: String,
    /// Carrier element names; index 0 is the basepoint.
    pub carrier: Vec<String>,
    pub monoid: AddTableDoc,
    /// Non-basepoint carrier name → monoid element name.
    pub generator_images: std::collections::BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Document {
    Monoid(MonoidDoc),
    Blueprint(BlueprintDoc),
    Scheme(SchemeDoc),
    F1swr(F1swrDoc),
    BObject(BObjectDoc),
}

impl Document {
    pub fn kind(&self) -> &str {
        match self {
            Document::Monoid(d) => &d.kind,
            Document::Blueprint(d) => &d.kind,
            Document::Scheme(d) => &d.kind,
            Document::F1swr(d) => &d.kind,
            Document::BObject(d) => &d.kind,
        }
    }
}

fn strict<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, DocError> {
    serde_json::from_str(text).map_err(json_err)
}

pub fn parse_document(text: &str) -> Result<Document, DocError> {
    #[derive(Deserialize)]
    struct Probe {
        kind: String,
    }
    let probe: Probe = strict(text)?;
    match probe.kind.as_str() {
        "monoid" => Ok(Document::Monoid(strict(text)?)),
        "blueprint" => Ok(Document::Blueprint(strict(text)?)),
        "scheme" => Ok(Document::Scheme(strict(text)?)),
        "f1swr" => Ok(Document::F1swr(strict(text)?)),
        "bobject" => Ok(Document::BObject(strict(text)?)),
        other => Err(DocError::new(format!(
            "unknown document kind `{other}`; expected monoid | blueprint | scheme | f1swr | bobject"
        ))),
    }
}

/// Canonical serialization: fixed field order, sorted map keys, two-space
/// indentation, trailing newline. Identical structures give identical bytes.
pub fn serialize_document(doc: &Document) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("document serialization cannot fail");
    s.push('\n');
    s
}
