//! Error types shared across the crate.

/// Errors raised by library operations.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    /// A numeric precondition failed (e.g. s <= 1, or P(2σ) >= 1).
    #[error("domain error: {0}")]
    Domain(String),
    /// The initial bracket does not straddle the target.
    #[error("bracket error: {0}")]
    Bracket(String),
    /// Enclosures are too wide to certify a sign; retry with a tighter policy.
    #[error("precision error: {0}")]
    Precision(String),
    #[error("resource error: {0}")]
    Resource(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
