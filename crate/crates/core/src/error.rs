use thiserror::Error;

/// Errors raised by the computational layers of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyzygyError {
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("divisor class {class} does not belong to model {model}")]
    ModelMismatch { model: String, class: String },
    #[error("divisor class {0} is not base-point-free")]
    NotBasePointFree(String),
    #[error("divisor class {0} is not ample")]
    NotAmple(String),
    #[error("intersection pairing needs a surface, got {0}")]
    DimensionMismatch(String),
    #[error("linear system |{0}| is empty")]
    EmptySystem(String),
    #[error("Hilbert function differences did not stabilize below k = {cap}")]
    NonPolynomialHilbert { cap: usize },
    #[error("differential d_{{{i},{j}}} has {nnz} nonzeros, above the size cap {cap}")]
    SizeCap { i: usize, j: usize, nnz: u64, cap: u64 },
    #[error("{0} is not an odd prime below 2^31")]
    InvalidPrime(u64),
    #[error("field failure: {0}")]
    FieldFailure(String),
    #[error("table entry (i={i}, j={j}) was not computed")]
    TableHole { i: usize, j: usize },
    #[error("table is not certified")]
    UncertifiedTable,
    #[error("dimension n = {0} is too small (need n >= 2)")]
    DimensionTooSmall(i64),
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, SyzygyError>;
