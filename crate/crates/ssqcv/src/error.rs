use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty input vector")]
    EmptyInput,

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid permutation map: {0}")]
    InvalidPermutation(String),

    #[error("matrix is not doubly stochastic: {0}")]
    NotDoublyStochastic(String),

    #[error("negative perturbation scale {0}")]
    NegativeLambda(f64),

    #[error("matrix is numerically singular")]
    SingularMatrix,

    #[error("reversal unavailable: {0}")]
    ReverseUnavailable(String),

    #[error("tied entries in {0}; a strict ordering is required")]
    TiedEntries(&'static str),

    #[error("sample count must be at least 1")]
    ZeroSamples,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("regression target is degenerate: {0}")]
    Unlearnable(String),

    #[error("pre-sampling failed after {attempts} attempts; the partition looks degenerate")]
    DegeneratePartition { attempts: usize },

    #[error("iteration index {t} out of range 0..={total}")]
    IterationOutOfRange { t: usize, total: usize },

    #[error("parse error at token {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
