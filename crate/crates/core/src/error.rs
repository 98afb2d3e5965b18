use thiserror::Error;

/// Errors produced anywhere in the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("elements live over different parameters")]
    ParameterMismatch,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("incompatible one-dimensional representation: {0}")]
    IncompatibleRep(String),

    #[error("defining relations fail: {0}")]
    RelationsFailed(String),

    #[error("weight decomposition failed: {0}")]
    WeightDecomposition(String),

    #[error("undecided: {0}")]
    Undecided(String),

    #[error("unknown label: {0}")]
    UnknownLabel(String),

    #[error("family parameter is excluded: {0}")]
    ExcludedFamilyParameter(String),

    #[error("ambiguous identification: {0}")]
    Ambiguous(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
