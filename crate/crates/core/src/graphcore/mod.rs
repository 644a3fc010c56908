//! Multigraphs, level structures and the combinatorics built on them:
//! arrow classification, level components, summits and ordered partitions.

mod document;
pub mod fixtures;
mod graph;
mod level;
mod partitions;
mod random;
mod vertex_set;

pub use document::{load_level_graph, load_level_map, to_document, GraphDocument};
pub use graph::{Arrow, Direction, Multigraph};
pub use level::{
    classify_arrows, components_below, is_coarsening, level_components, summits,
    ArrowClassification, ArrowKind, ComponentsBelow, LevelComponent, LevelStructure, Summits,
};
pub use partitions::{enumerate_ordered_partitions, DEFAULT_PARTITION_BOUND};
pub use random::{random_level_graph, RandomGraphParams};
pub use vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("empty vertex list")]
    EmptyVertexList,
    #[error("{count} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { count: usize, max: usize },
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("non-integer level for vertex `{0}`")]
    NonIntegerLevel(String),
    #[error("missing level for vertex `{0}`")]
    MissingLevel(String),
    #[error("parts do not form an ordered partition of the vertices")]
    NotAPartition,
    #[error("level {level} out of range 1..={depth}")]
    LevelOutOfRange { level: usize, depth: usize },
    #[error("vertex counts differ: {left} vs {right}")]
    VertexCountMismatch { left: usize, right: usize },
    #[error("{what}: size {size} exceeds bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
}
