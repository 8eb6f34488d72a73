//! Crate-wide error type.

use std::path::PathBuf;
use thiserror::Error;

/// Errors produced by any tnnr operation.
#[derive(Error, Debug)]
pub enum TnnrError {
    /// Invalid network or training configuration.
    #[error("configuration error: {0}")]
    Config(String),

    /// Tensor shape mismatch.
    #[error("dimension error: {context}: expected {expected}, got {got}")]
    Dimension {
        context: String,
        expected: usize,
        got: usize,
    },

    /// Non-finite or otherwise unusable input values.
    #[error("input error: {0}")]
    Input(String),

    /// API misuse (stale cache, missing labels, empty anchor set, ...).
    #[error("usage error: {0}")]
    Usage(String),

    /// Numerical failure during training.
    #[error("training error: {0}")]
    Training(String),

    /// Loop sampling failure (pool too small, no admissible loop type).
    #[error("sampling error: {0}")]
    Sampling(String),

    /// Split construction failure.
    #[error("split error: {0}")]
    Split(String),

    /// Dataset load/validation failure.
    #[error("load error: {path}: {message}")]
    Load { path: PathBuf, message: String },

    /// Report emission failure.
    #[error("report error: {0}")]
    Report(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, TnnrError>;
