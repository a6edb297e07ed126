use thiserror::Error;

/// Errors produced by graph construction, metric evaluation and verification.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex id {id} out of range for a graph with {n} vertices")]
    BadVertexId { id: usize, n: usize },
    #[error("weight of vertex {0} must be strictly positive and finite")]
    NonPositiveWeight(usize),
    #[error("weight list has {got} entries, expected {expected}")]
    WeightLength { expected: usize, got: usize },
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("no vertices remain after removal")]
    EmptyRemainder,
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("vertex set must be a proper subset of V")]
    FullSet,
    #[error("vertex set volume exceeds half of the total volume")]
    VolumeTooLarge,
    #[error("vertex set width {got} does not match graph size {expected}")]
    SetWidth { expected: usize, got: usize },
    #[error("graph is disconnected")]
    DisconnectedInput,
    #[error("graph is trivial (fewer than two vertices)")]
    TrivialGraph,
    #[error("graph has {n} vertices, enumeration limit is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("graph is not regular")]
    NotRegular,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("no simple graph found after {0} pairing attempts")]
    RetryLimitExceeded(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
