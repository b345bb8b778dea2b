use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("vertex {0} appears more than once in the sequence")]
    DuplicateVertex(usize),

    #[error("edge index {index} out of range for {m} edges")]
    EdgeOutOfRange { index: usize, m: usize },

    #[error("edge index {0} appears more than once in the sequence")]
    RepeatedEdge(usize),

    #[error("hyperedge {0} is empty")]
    EmptyEdge(usize),

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Precondition(String),

    #[error("instance has {size} {what}, above the exact-search cap of {cap}")]
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("search budget of {0} nodes exhausted before optimality was proven")]
    BudgetExceeded(u64),

    #[error("sequence is illegal at position {position}: vertex {vertex} dominates nothing new")]
    IllegalStep { position: usize, vertex: usize },

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("not a chain graph: vertices {0} and {1} have incomparable neighborhoods")]
    NotChain(usize, usize),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
