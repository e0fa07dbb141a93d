use thiserror::Error;

/// Shared error type for the kernel.
///
/// The `Bound*` variants are the honest face of bounded saturation: they are
/// raised when a question cannot be answered inside the declared degree
/// window, never papered over with a guess.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    /// The presentation forces `0 = 1`; the zero monoid is excluded.
    #[error("presentation collapses to the zero monoid (0 = 1)")]
    ZeroMonoid,

    /// A relation (or other required datum) does not fit inside the degree window.
    #[error("degree bound {bound} too small: {reason}")]
    BoundTooSmall { bound: u32, reason: String },

    /// A query monomial lies outside the saturated window.
    #[error("monomial of degree {degree} exceeds the saturated degree bound {bound}")]
    BoundExceeded { degree: u32, bound: u32 },

    /// An assignment of generators fails a multiplicative relation.
    #[error("assignment is not a monoid morphism: relation {relation} is violated")]
    NotAMonoidMorphism { relation: String },

    /// A finite additive quotient would not stabilize inside its window.
    #[error("saturation incomplete: {0}")]
    SaturationIncomplete(String),

    /// Chart overlap data fails a compatibility check.
    #[error("gluing inconsistent: {0}")]
    GluingInconsistent(String),

    /// A unit group carries torsion, so a count that must be polynomial is refused.
    #[error("unit group at {point} has torsion {factors:?}; count is not polynomial in n")]
    NotTorsionFree { point: String, factors: Vec<u64> },

    /// A parameter exceeds a configured cap (for example a field size).
    #[error("{what} = {value} exceeds the configured cap {cap}")]
    CapExceeded { what: &'static str, value: u64, cap: u64 },

    /// Checked integer arithmetic overflowed a fixed-width type.
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
