//! Set functions on vertex subsets, the polymatroid base polytopes they
//! define, splittings along ordered partitions and the face correspondence
//! between residue spaces and the residue polytope.

mod faces;
mod gamma;
mod polytope;
mod splitting;
mod table;

pub use faces::{
    chain_face, chain_weights, face_sweep, verify_face_theorem, FaceTheoremReport, Orientation,
    PartitionFace, DEFAULT_FACE_BOUND,
};
pub use gamma::{gamma_table, pi0_gamma_by_contraction, projected_rank_table};
pub use polytope::{
    base_polytope, for_each_permutation, greedy_vertex, point_value, BasePolytope,
    DEFAULT_VERTEX_BOUND,
};
pub use splitting::{splitting, Modularity};
pub use table::{SetFunction, DEFAULT_TABLE_BOUND};

use crate::graphcore::GraphError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("{what}: size {size} exceeds bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },
    #[error("table has {found} entries, expected {expected}")]
    TableSize { expected: usize, found: usize },
    #[error("set function is not submodular")]
    NotSubmodular,
    #[error("greedy vertex {index} violates a defining inequality")]
    VertexOutside { index: usize },
    #[error("ground sets differ: {left} vs {right}")]
    GroundMismatch { left: usize, right: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}
