use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument outside an operation's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// A computed value violated an invariant the mathematics guarantees,
    /// such as a non-integral Schur coefficient. Always a bug.
    #[error("internal consistency error: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
