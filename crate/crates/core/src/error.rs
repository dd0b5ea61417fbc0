use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("coordinate labels must be pairwise distinct (vertices {0} and {1} share a label)")]
    DuplicateCoordinate(usize, usize),

    #[error("expected {expected} coordinate labels, got {got}")]
    CoordinateCount { expected: usize, got: usize },

    #[error("graph is disconnected: no path between vertices {0} and {1}")]
    Disconnected(usize, usize),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("vertex set must be nonempty")]
    EmptyVertexSet,

    #[error("built-in enumeration supports 1 <= n <= {max}, got {n}; supply larger corpora as graph6 files")]
    UnsupportedOrder { n: usize, max: usize },

    #[error("vertex {vertex} has degree {degree}, expected 2")]
    NotDegreeTwo { vertex: usize, degree: usize },

    #[error("graph needs at least two vertices (diameter is 0)")]
    TooFewVertices,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("point set is not axis slice convex")]
    NotAxisSliceConvex,

    #[error("unknown family or core name: {0}")]
    UnknownFamily(String),

    #[error("unknown fixture index {0} (expected 1..=9)")]
    UnknownFixture(usize),

    #[error("line {line}: {source}")]
    AtLine { line: usize, source: Box<Error> },

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
