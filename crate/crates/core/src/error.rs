use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid edge ({u}, {v}): {reason}")]
    InvalidEdge {
        u: usize,
        v: usize,
        reason: &'static str,
    },

    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    InvalidVertex { vertex: usize, vertex_count: usize },

    #[error("vertex set over {set} vertices used with a graph of {graph} vertices")]
    SetMismatch { set: usize, graph: usize },

    #[error("graph is not connected")]
    Disconnected,

    #[error("invalid elimination ordering: {0}")]
    InvalidOrdering(String),

    #[error("node budget exhausted; hull number is at least {lower_bound}")]
    BudgetExceeded { lower_bound: usize },

    #[error("input too large: {size} exceeds the limit of {limit}")]
    TooLarge { size: usize, limit: usize },

    #[error("invalid restricted instance: {0}")]
    InvalidInstance(String),

    #[error("not a witness: {0}")]
    NotAWitness(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
