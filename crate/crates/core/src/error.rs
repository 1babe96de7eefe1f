use thiserror::Error;

/// Errors raised by graph construction, polynomial arithmetic and the engines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph has {n} vertices; at most {max} are supported")]
    TooManyVertices { n: usize, max: usize },

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),

    #[error("invalid vertex set: {0}")]
    InvalidVertexSet(String),

    #[error("not a perfect elimination ordering: earlier neighbors of vertex {vertex} are not a clique ({u} and {v} non-adjacent)")]
    NotPeo { vertex: usize, u: usize, v: usize },

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("graph is not chordal")]
    NotChordal,

    #[error("graph contains a triangle {0:?}")]
    TriangleFound([usize; 3]),

    #[error("resource budget exceeded: {0}")]
    Budget(String),

    #[error("zero polynomial where a nonzero polynomial is required")]
    ZeroPolynomial,

    #[error("interval endpoint {0} is a root")]
    EndpointIsRoot(String),

    #[error("invalid interval: {0}")]
    InvalidInterval(String),

    #[error("graph is not regular: vertex {vertex} has degree {degree}, expected {expected}")]
    NotRegular {
        vertex: usize,
        degree: usize,
        expected: usize,
    },

    #[error("eigensolver did not converge")]
    NoConvergence,

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("invalid homomorphism: {0}")]
    InvalidHomomorphism(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("invalid rational {0:?}: expected p/q or an integer")]
    InvalidRational(String),

    #[error("independent computations disagree: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
