//! Numerical semigroups: Apéry sets, pseudo-Frobenius numbers, reduced type,
//! parametric families, gluing and numerical duplication, plus a brute-force
//! oracle that rechecks every closed form.

pub mod constructions;
pub mod error;
pub mod families;
pub mod oracle;
pub mod semigroup;

pub use error::{Error, Result};
pub use semigroup::{Extremality, NumericalSemigroup, PfProfile};
