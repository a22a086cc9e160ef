use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    InvalidVertex { vertex: Vertex, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertices {0} and {1} are adjacent; a vertex cut is undefined")]
    AdjacentPair(Vertex, Vertex),

    #[error("cut endpoints must differ (got {0} twice)")]
    SameEndpoint(Vertex),

    #[error("invalid parameters: {0}")]
    Params(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("oracle size guard: {n} vertices exceeds the limit of {limit}")]
    SizeGuard { n: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
