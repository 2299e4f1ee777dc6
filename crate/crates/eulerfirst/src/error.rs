//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated a documented precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A computation would exceed a configured resource cap.
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    /// A conditional distribution was requested on an empty event.
    #[error("undefined distribution: {0}")]
    UndefinedDistribution(String),
    /// Numeric evaluation outside the valid domain (singular integrand,
    /// truncation too coarse for the requested tolerance, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// An internal consistency check failed; indicates a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
