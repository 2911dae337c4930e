use thiserror::Error;

/// Failures reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system {kind}{rank}: {reason}")]
    InvalidType {
        kind: String,
        rank: usize,
        reason: String,
    },
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("unbounded functional: {0}")]
    Unbounded(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
