use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid Dyck path heights: {0}")]
    InvalidHeights(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("inexact division: nonzero remainder")]
    InexactDivision,

    #[error("pole: evaluation points must be pairwise distinct")]
    Pole,

    #[error("basis error: {0}")]
    Basis(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
