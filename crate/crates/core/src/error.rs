use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("{0} is not a prime below 2^31")]
    NonPrime(u64),
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("generator {index} is not homogeneous")]
    NonHomogeneous { index: usize },
    #[error("generator {index} is not a monomial")]
    NonMonomial { index: usize },
    #[error("resource budget exceeded: {0}")]
    Resource(String),
    #[error("module does not have finite length")]
    InfiniteLength,
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),
    #[error("ring is not Cohen-Macaulay (depth {depth} < dimension {dim})")]
    NotCohenMacaulay { dim: usize, depth: usize },
    #[error("no homogeneous non-zero-divisor of degree <= {max_degree} found")]
    NoNzdFound { max_degree: u64 },
    #[error("no injective map from the canonical module into the ring was found")]
    EmbeddingNotFound,
    #[error("the ideal contains no certified non-zero-divisor")]
    NoNzdInIdeal,
    #[error("resolution truncated before homological degree {0}")]
    TruncationInsufficient(usize),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("pipeline invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
