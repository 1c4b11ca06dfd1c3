//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("closed path through edges {0:?}")]
    CycleFound(Vec<usize>),
    #[error("vertex {0} has {1} left edges and {2} right edges; one side must be a single edge")]
    NotOneGraph(usize, usize, usize),
    #[error("requested bound {requested} exceeds configured bound {limit}")]
    BoundExceeded { requested: usize, limit: usize },
    #[error("edge {0} is not an interchangeable plus/minus pair")]
    NotInterchangeable(usize),
    #[error("maps cannot be composed: {0}")]
    ComposeMismatch(String),
    #[error("map is not flat: witness edge {0}")]
    NotFlat(usize),
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("rig law violated: {0}")]
    RigLawViolation(String),
    #[error("operation requires an enumerable carrier: {0}")]
    NotEnumerable(String),
    #[error("set is not multiplicative: {0}")]
    NotMultiplicative(String),
    #[error("gluing data fails the cocycle condition: {0}")]
    CocycleFailure(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown: {0}")]
    Unknown(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
