use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),

    #[error("graph is not a tree")]
    NotATree,

    #[error("tree has no vertex of degree at least three")]
    No3PlusVertex,

    #[error("graph is not chordal")]
    NotChordal,

    #[error("colouring covers {got} vertices but the graph has {expected}")]
    DomainMismatch { expected: usize, got: usize },

    #[error("colour {colour} at vertex {vertex} is not below k = {k}")]
    ColourOutOfRange { vertex: VertexId, colour: usize, k: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{source_name}:{line}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        message: String,
    },

    #[error("search budget exceeded")]
    BudgetExceeded,

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
