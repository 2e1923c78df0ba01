use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("terminal set must be nonempty")]
    EmptyTerminals,
    #[error("expected a set of {expected} vertices, got {actual}")]
    SetSize { expected: usize, actual: usize },
    #[error("graph has {n} vertices; exact routine is limited to {max}")]
    TooLarge { n: usize, max: usize },
    #[error("forbidden graph {0}: {1}")]
    BadObstruction(usize, &'static str),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
