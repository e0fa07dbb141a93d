//! Exact computational kernel for pointed-monoid geometry.
//!
//! Everything here works with finitely presented commutative pointed monoids
//! (an absorbing `0` adjoined), blueprints (monoids with additive relations
//! imposed on their semiring of formal sums), and the small category of
//! finitely carried set/monoid pairs that those blueprints live in.  On top of
//! that sit glued charts ("schemes"), point counting over the cyclic targets
//! `F1^n = Z_n ∪ {0}`, and truncated zeta series.
//!
//! Two conventions hold throughout:
//!
//! * all arithmetic is exact — `BigInt`/`BigRational` where values can grow,
//!   checked machine integers elsewhere; no floating point anywhere;
//! * every congruence computation happens inside a *declared* degree window
//!   (bounded saturation).  Results are canonical and deterministic within the
//!   window, and the window is part of the presentation, never guessed.

pub mod blueprint;
pub mod category;
pub mod counting;
pub mod error;
pub mod groupring;
pub mod monomial;
pub mod presentation;
pub mod primes;
pub mod ringpres;
pub mod saturate;
pub mod scheme;
pub mod series;
pub mod snf;
pub mod unit_group;
pub mod zeta;

pub use blueprint::{
    hom_b, validate_blueprint, Blueprint, ClosureCaps, CoefficientRing, HomBuckets, PolyRelation,
    PolySum, PolyTerm, ValidationReport, Violation,
};
pub use counting::{fit_and_verify, hom_count_abelian, CountPolynomial, FitFailure};
pub use error::Error;
pub use groupring::GroupRingElement;
pub use monomial::Monomial;
pub use presentation::{localize, MonoidPresentation};
pub use primes::{enumerate_primes, PrimeIdeal};
pub use saturate::{hom_monoid, saturate, F1nElem, MonoidHom, SaturationTable};
pub use scheme::{
    check_q_le_p, deitmar_zeta, is_torsion_free, point_count_polynomials, points, q_count,
    sample_p, torsion_free_points, AffinePiece, F1SchemeWithRelations, GluedScheme, Gluing,
    SchemePoint, ZetaMode,
};
pub use series::TruncatedPowerSeries;
pub use snf::{smith_normal_form, IntMatrix, SmithNormalForm};
pub use unit_group::{unit_group, AbelianGroupStructure};
