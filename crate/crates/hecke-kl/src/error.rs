use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("basis mismatch: expected {expected}, found {found}")]
    BasisMismatch { expected: &'static str, found: &'static str },
    #[error("invalid composition or partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("independent methods disagree: {0}")]
    MethodDisagreement(String),
    #[error("identity violated: {0}")]
    Violation(String),
    #[error("rank {0} exceeds the configured maximum {1}")]
    RankTooLarge(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
