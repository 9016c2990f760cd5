use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("edge {edge} is a loop at vertex {vertex}")]
    LoopEdge { edge: usize, vertex: usize },
    #[error("edge {edge} duplicates edge {first}")]
    DuplicateEdge { edge: usize, first: usize },
    #[error("edge {edge} has endpoint {vertex} outside 1..={n}")]
    IndexOutOfRange { edge: usize, vertex: usize, n: usize },
    #[error("graph is disconnected: vertex {vertex} is unreachable from vertex 1")]
    Disconnected { vertex: usize },
    #[error("graph has {count} spanning trees, more than the cap of {cap}")]
    TooManyTrees { count: String, cap: u64 },
    #[error("dimension mismatch: {what} has size {found}, expected {expected}")]
    DimensionMismatch {
        what: String,
        expected: usize,
        found: usize,
    },
    #[error("vector lengths differ: {0}")]
    LengthMismatch(String),
    #[error("off-diagonal costs are not symmetric{}", match pair {
        Some((i, j)) => format!(" (q({},{}) != q({},{}))", i + 1, j + 1, j + 1, i + 1),
        None => String::new(),
    })]
    NotSymmetricOffDiagonal { pair: Option<(usize, usize)> },
    #[error("matrix is not symmetric at ({row},{col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("dense matrix of size {size} exceeds the cap of {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("graph class not supported here: {0}")]
    WrongGraphClass(String),
    #[error("bad generator parameters: {0}")]
    BadParams(String),
    #[error("invalid rational {text:?}: {reason}")]
    BadRational { text: String, reason: String },
}
