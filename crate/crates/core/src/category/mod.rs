//! Finite pointed objects with a partial additive structure, their
//! morphisms, monoidal structure (tensor and internal hom), small limits and
//! colimits, and the functors connecting presented monoids, blueprints, and
//! table semirings.

pub mod addmonoid;
pub mod bobject;
pub mod coeq;
pub mod diagram;
pub mod functors;
pub mod homobj;
pub mod morphism;
pub mod tensor;

pub use addmonoid::AddMonoid;
pub use bobject::FiniteBObject;
pub use coeq::{coequalizer_blueprints, monoid_coequalizer, BlueprintMorphism};
pub use diagram::{check_colimit_universal, check_limit_universal, colimit_b, limit_b, Cocone, Cone, Diagram};
pub use functors::{
    counit_blueprint, functor_f, functor_rho, functor_sigma, hom_count_into_counit,
    rho_hom_count, semiring_hom_count, sigma_hom_count, FiniteSemiring, SemiringPresentation,
};
pub use homobj::{internal_hom_b, HomObject};
pub use morphism::{find_isomorphism, hom_count, hom_set, BMorphism};
pub use tensor::{tensor_b, TensorResult};
