use thiserror::Error;

/// Errors raised by graph construction and the counting routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {index} is a loop at vertex {vertex}")]
    LoopEdge { index: usize, vertex: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {index} out of range for a graph with {m} edges")]
    EdgeOutOfRange { index: usize, m: usize },

    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },

    #[error("vertex set is empty")]
    EmptySet,

    #[error("operation needs at least one vertex")]
    EmptyGraph,

    #[error("expected {expected} edge weights, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("variable y{variable} would exceed exponent 2")]
    ExponentOverflow { variable: usize },

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("expansion has no terms")]
    EmptyExpansion,

    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
