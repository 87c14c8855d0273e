use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("degree overflow: degree {degree} exceeds ambient dimension {dim}")]
    DegreeOverflow { degree: usize, dim: usize },

    #[error("invalid multi-index {0:?}: entries must be strictly increasing and below the ambient dimension")]
    InvalidIndex(Vec<usize>),

    #[error("operation not defined in degree {0}")]
    UnsupportedDegree(usize),

    #[error("basis is not orthonormal (Gram deviation {0:.3e})")]
    NotOrthonormal(f64),

    #[error("matrix is not skew-symmetric (relative asymmetry {0:.3e})")]
    NotSkew(f64),

    #[error("matrix is singular (smallest singular value {0:.3e})")]
    Singular(f64),

    #[error("{name} = {value} is outside the admissible range {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
