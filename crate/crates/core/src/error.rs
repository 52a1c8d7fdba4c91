use thiserror::Error;

/// Errors raised by graph construction and invariant computation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("loop at vertex {0} but loops are not allowed")]
    LoopNotAllowed(usize),

    #[error("graph already carries loops")]
    AlreadyLooped,

    #[error("operation requires a simple graph (no loops)")]
    LoopyInput,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("{what}: requested {requested}, budget allows {limit}")]
    BudgetExceeded {
        what: &'static str,
        requested: u128,
        limit: u128,
    },

    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("factor graphs must have more than one vertex")]
    TrivialFactor,

    #[error("method does not apply: {0}")]
    MethodMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
