use thiserror::Error;

/// Errors reported by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A coefficient or term index past the truncation order.
    #[error("index {index} out of range for order {order}")]
    Range { index: usize, order: usize },
    /// Malformed text input; `position` is 1-based.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    /// A documented practical bound was exceeded.
    #[error("bound exceeded: {0}")]
    Bound(String),
    /// A numeric approximation could not reach its tolerance.
    #[error("convergence failure: {0}")]
    Convergence(String),
}

pub type Result<T> = std::result::Result<T, Error>;
