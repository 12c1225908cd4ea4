//! Lie algebras from structure constants and the constructions built on them.

mod algebra;
mod cotangent;
mod structure_eq;
mod subspace;

pub use algebra::{JacobiViolation, LieAlgebra, ValidationReport};
pub use cotangent::{coadjoint, cotangent, neutral_gram, CotangentAlgebra};
pub use structure_eq::StructureEquations;
pub use subspace::{
    characteristic_subspaces, is_ideal, quotient, semidirect, CharacteristicSubspaces, Subspace,
};
pub(crate) use subspace::unit;
