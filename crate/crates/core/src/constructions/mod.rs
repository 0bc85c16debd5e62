//! Gluing, nice extensions, semigroup ideals and numerical duplication.

pub mod duplication;
pub mod gluing;
pub mod ideal;

pub use duplication::{
    duplicate, duplication_frobenius, duplication_max_self, duplication_max_star,
    duplication_min_classifier, duplication_multiplicity, duplication_pf, duplication_type,
    DuplicationSpec, MinClassification, MinClause, Verdict,
};
pub use gluing::{
    glue, gluing_frobenius, gluing_maximal_sufficient, gluing_pf, gluing_type,
    max_coefficient_sum, nice_extension, nice_extension_for_target, nice_extension_maximal_iff,
    GluingSpec, NiceEquivalence, NiceExtension,
};
pub use ideal::{IdealKind, SemigroupIdeal};
