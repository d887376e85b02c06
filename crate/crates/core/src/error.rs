use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the void complex has no f-vector or homology")]
    VoidComplex,

    #[error("vertex {vertex} out of range for a complex on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("at most {max} vertices are supported, got {got}")]
    TooManyVertices { got: usize, max: usize },

    #[error("sequence has a trailing zero entry")]
    TrailingZero,

    #[error("ideal is not squarefree")]
    NotSquarefree,

    #[error("the unit ideal has no Hochster complex")]
    UnitIdeal,

    #[error("variable count {got} exceeds the configured cap of {cap}")]
    VariableCapExceeded { got: usize, cap: usize },

    #[error("exponent vector has {got} entries, expected {expected}")]
    ArityMismatch { got: usize, expected: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("graph is not chordal")]
    NotChordal,

    #[error("graph has no edges")]
    NoEdges,

    #[error("invalid f-vector: {0}")]
    InvalidFVector(String),

    #[error("length mismatch: {0}")]
    LengthMismatch(String),

    #[error("ideal is not stable")]
    NotStable,

    #[error("ideal is not generic")]
    NotGeneric,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("construction invariant violated: {0}")]
    ConstructionInvariant(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
