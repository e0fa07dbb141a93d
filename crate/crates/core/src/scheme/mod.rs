//! Glued schemes over the field with one element: explicit chart diagrams,
//! their point sets, the two point counts `P` and `Q`, and the transfer maps
//! into classical ring points over prime fields.

pub mod charts;
pub mod counts;
pub mod points;
pub mod psi;

pub use charts::{analyze_gluing, AffinePiece, GluedScheme, Gluing, GluingAnalysis};
pub use counts::{check_q_le_p, p_polynomial, point_count_polynomials, q_count, sample_p, MarginRow, QReport};
pub use points::{is_torsion_free, point_label, points, torsion_free_points, SchemePoint};
pub use psi::{
    is_prime_u64, psi1_injectivity, psi2_point_sets, F1SchemeWithRelations, Psi1Report,
    Psi2Report, FIELD_NOTE,
};

pub use crate::zeta::{deitmar_zeta, ZetaMode};
