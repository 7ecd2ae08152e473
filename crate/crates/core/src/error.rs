use thiserror::Error;

/// Errors raised by graph construction, enumeration and classification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graphs must have at least one vertex")]
    EmptyGraph,
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("operation needs a nonempty list of graphs")]
    EmptyGraphList,
    #[error("graph has no edges")]
    NoEdges,
    #[error("{what}: size {size} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown graph name `{0}`")]
    UnknownGraphName(String),
    #[error("family member on {0} vertices is outside the classifier's scope (at most 4)")]
    OutOfScope(usize),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
