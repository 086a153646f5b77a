use thiserror::Error;

/// Error type shared by every table, census and constant evaluator.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A requested configuration cannot be honored (limits, ranges).
    #[error("configuration error: {0}")]
    Config(String),
    /// The machine cannot satisfy the request (memory, missing table coverage).
    #[error("resource error: {0}")]
    Resource(String),
    /// A persisted artifact is malformed (bad magic, truncation, checksum).
    #[error("format error: {0}")]
    Format(String),
    /// The asymptotic regime requested does not cover these parameters.
    #[error("regime error: {0}")]
    Regime(String),
    /// The caller combined modes or arguments incorrectly.
    #[error("usage error: {0}")]
    Usage(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
