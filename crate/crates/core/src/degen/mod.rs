//! One-parameter degenerations of subspaces of a coordinate space: the
//! realization along an ordered partition and the torus limit it computes.

mod limit;
mod realization;
mod verify;
mod weights;

pub use limit::{initial_space_limit, plucker_limit_oracle, PLUCKER_BOUND};
pub use realization::{arrow_blocks, flag_and_realization, Realization};
pub use verify::{verify_degeneration_theorem, DegenerationChecks, DegenerationReport};
pub use weights::{LaurentSubspace, WeightAssignment};

use crate::graphcore::GraphError;
use crate::polymat::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DegenError {
    #[error("the second level structure is not a coarsening of the first")]
    NotACoarsening,
    #[error("coordinate blocks do not partition the ambient coordinates")]
    BlocksNotPartition,
    #[error("expected {expected} weights, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("{what}: size {size} exceeds bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: u64,
        bound: u64,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
