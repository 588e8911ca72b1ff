use thiserror::Error;

/// Errors raised by parsing, validation and the statistical routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("integrity check failed: {0}")]
    Integrity(String),

    #[error("invalid binomial sample: {successes} successes out of {trials} trials")]
    InvalidSample { successes: u64, trials: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("no records selected: {0}")]
    EmptySelection(String),

    #[error("nation sets differ: only in left {only_left:?}, only in right {only_right:?}")]
    NationMismatch {
        only_left: Vec<String>,
        only_right: Vec<String>,
    },

    #[error("design matrix is rank deficient (rank {rank} < {columns} columns)")]
    RankDeficient { rank: usize, columns: usize },

    #[error("complete separation: coefficient {index} diverged to {value:.3}")]
    Separation { index: usize, value: f64 },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
