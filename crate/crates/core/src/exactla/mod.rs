//! Exact linear algebra over the rationals: canonical RREF, kernels,
//! coordinate projections, and support predicates on vector collections.

mod collection;
mod matrix;
pub mod modp;
mod rational;
mod subspace;

pub use collection::{
    random_sti_collection, set_theoretic_checks, LabeledVector, SetTheoreticReport,
    VectorCollection,
};
pub use matrix::{rref, RationalMatrix};
pub use modp::rank_mod_p;
pub use rational::{ParseRationalError, Rational};
pub use subspace::{kernel, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("coordinate {index} out of range for ambient dimension {bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("ambient dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
}
