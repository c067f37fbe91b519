use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameters for `{family}`: {reason}")]
    InvalidParams { family: String, reason: String },
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} has odd degree")]
    OddDegree(usize),
    #[error("walk step {0}-{1} is not an edge")]
    InvalidWalk(usize, usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown template class `{0}`")]
    UnknownClass(String),
    #[error("certificate host has {cert} vertices but graph has {graph}")]
    HostMismatch { cert: usize, graph: usize },
    #[error("invalid construction sequence: {0}")]
    InvalidSequence(String),
    #[error("invalid contact representation: {0}")]
    InvalidRepresentation(String),
    #[error("{what} exceeds the size guard ({size} > {limit})")]
    SizeGuard { what: &'static str, size: usize, limit: usize },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
