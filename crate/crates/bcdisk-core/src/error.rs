//! Crate-wide error type.
//!
//! Numerical routines in this crate return values rather than `Result` when
//! every input is valid; errors arise from parsing (literals, config files,
//! on-disk field formats), from I/O, and from structurally invalid requests
//! (e.g. an order-zero factorization bundle).

use thiserror::Error;

/// Errors produced by parsing, I/O, and structurally invalid requests.
#[derive(Debug, Error)]
pub enum Error {
    /// A bicomplex/complex literal, field file, or boundary-data file could
    /// not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A configuration key or value was rejected.
    #[error("config error: {0}")]
    Config(String),

    /// A request was structurally invalid (wrong sizes, empty input, ...).
    #[error("invalid input: {0}")]
    Invalid(String),

    /// Underlying I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),

    /// JSON (de)serialization failure for reports.
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
