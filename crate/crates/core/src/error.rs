use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("decomposition has no unit block to merge with")]
    NoUnitBlock,
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
    #[error("graph of order {n} exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("component {vertices:?} has {} vertices, above the enumeration ceiling {ceiling}", vertices.len())]
    ComponentTooLarge { vertices: Vec<usize>, ceiling: usize },
    #[error("size mismatch: {left} vs {right} vertices")]
    SizeMismatch { left: usize, right: usize },
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("triclique {index} has overlapping parts")]
    OverlappingParts { index: usize },
    #[error("cycle order must be at least 3, got {0}")]
    BadOrder(usize),
    #[error("graph is not a forest")]
    NotAForest,
    #[error("graph is not a tree")]
    NotATree,
    #[error("built-in enumeration supports n <= {max}, got {n}")]
    TooLargeForBuiltin { n: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
