use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {0} is not in {{1, 2, 3}}")]
    InvalidIndex(i64),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("eps must be -1, 0 or 1, got {0}")]
    InvalidEps(i64),
    #[error("internal fault: inexact division in {0}")]
    InexactDivision(String),
    #[error("internal fault: result is not a scalar")]
    NotScalar,
}

pub type Result<T> = std::result::Result<T, Error>;
