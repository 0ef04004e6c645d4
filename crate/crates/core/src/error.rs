use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A hyperedge refers to a vertex index outside `0..n`.
    #[error("vertex {vertex} in edge {edge} out of range (order is {order})")]
    VertexOutOfRange {
        vertex: usize,
        edge: usize,
        order: usize,
    },

    /// A hyperedge has fewer than two distinct vertices.
    #[error("edge {edge} has {len} distinct vertices; hyperedges need at least 2")]
    EdgeTooSmall { edge: usize, len: usize },

    /// A hyperedge lists the same vertex more than once.
    #[error("edge {edge} lists vertex {vertex} more than once")]
    DuplicateVertexInEdge { vertex: usize, edge: usize },

    /// A generator or closed-form operation was called outside its parameter domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Vector/matrix dimensions do not line up.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A matrix that must be symmetric is not.
    #[error("matrix is not symmetric at ({row},{col})")]
    NotSymmetric { row: usize, col: usize },

    /// The Jacobi iteration did not reach the off-diagonal threshold.
    #[error("eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    /// An operation that requires a (k,r)-regular hypergraph got something else.
    #[error("hypergraph is not regular: {0}")]
    NotRegular(String),

    /// Walk generating function evaluated at (or too close to) a pole.
    #[error("evaluation point {point} is within {radius} of a pole")]
    PoleProximity { point: f64, radius: f64 },

    /// A vertex partition is not a partition of `0..n`.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// A partition expected to be equitable is not.
    #[error("partition is not equitable: rows {row_a} and {row_b} of block ({block_row},{block_col}) have sums {sum_a} and {sum_b}")]
    NotEquitable {
        block_row: usize,
        block_col: usize,
        row_a: usize,
        row_b: usize,
        sum_a: i64,
        sum_b: i64,
    },

    /// Text-format parse failure.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
