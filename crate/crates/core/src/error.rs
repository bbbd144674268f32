use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-contract input (dimensions, fields, ranges).
    #[error("invalid input: {0}")]
    Input(String),
    /// A file or literal could not be parsed.
    #[error("format error: {0}")]
    Format(String),
    /// A configured size guard would be exceeded.
    #[error("resource guard exceeded: {0}")]
    Resource(String),
    /// A constructive procedure produced no admissible object.
    #[error("construction failed: {0}")]
    Construction(String),
    /// A post-condition re-check failed; the preconditions were not what they claimed.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
