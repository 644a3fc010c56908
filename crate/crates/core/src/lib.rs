//! Exact computations on level graphs: residue subspaces of the arrow space,
//! the submodular functions they induce, residue polytopes and their faces,
//! and one-parameter degenerations of the underlying subspaces.

pub mod degen;
pub mod exactla;
pub mod graphcore;
pub mod polymat;
pub mod residue;

pub use exactla::{Rational, RationalMatrix, Subspace};
pub use graphcore::{LevelStructure, Multigraph, VertexSet};
