use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("file not found: {0}")]
    FileNotFound(PathBuf),
    #[error("row {row}: {reason}")]
    Parse { row: u64, reason: String },
    #[error("dataset is empty")]
    EmptyDataset,
    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),
    #[error("{0}")]
    Usage(String),
    #[error("no family converged")]
    NoConvergedFit,
    #[error(transparent)]
    Core(#[from] blockmax_core::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code: 1 usage, 2 data, 3 numerical failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::UnsupportedFormat(_) => 1,
            Error::NoConvergedFit => 3,
            _ => 2,
        }
    }
}
