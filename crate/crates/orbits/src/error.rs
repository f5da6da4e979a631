//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition sums differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("operation not supported for {0}")]
    UnsupportedKind(String),
    #[error("unsupported partition layout: {0}")]
    UnsupportedPartition(String),
    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),
    #[error("construction failed verification: {0}")]
    ConstructionFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
