use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("box ({0},{1}) lies outside the strip")]
    BoxOutsideStrip(i64, i64),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("not a lower order ideal: {0}")]
    InvalidIdeal(String),
    #[error("shape containment fails")]
    NotContained,
    #[error("{0}")]
    Domain(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
