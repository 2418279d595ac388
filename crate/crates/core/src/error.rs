use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("line {line}, field `{field}`: {message}")]
    Parse {
        line: usize,
        field: String,
        message: String,
    },

    #[error("problem is infeasible")]
    Infeasible,

    #[error("LP is unbounded")]
    Unbounded,

    #[error("simplex iteration limit exceeded after {iterations} iterations ({rows} rows, {cols} columns)")]
    IterationLimit {
        iterations: usize,
        rows: usize,
        cols: usize,
    },

    #[error("oracle refused: {0}")]
    OracleGuard(String),

    #[error("unknown version `{label}`; known versions: {known}")]
    UnknownVersion { label: String, known: String },

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
