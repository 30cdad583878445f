use thiserror::Error;

/// Errors raised by the library.
///
/// Every operation is total on well-formed input; these variants describe the
/// ways an input can fail its precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("capacity exceeded: {what} (limit {limit})")]
    Capacity { what: String, limit: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("constraint violated: {0}")]
    Constraint(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("not a perfect matching: {0}")]
    NotPerfectMatching(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
