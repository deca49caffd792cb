//! Error type shared across the crate, with the CLI exit-code mapping.

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Invalid configuration value. Names the offending field.
    #[error("config error: {0}")]
    Config(String),

    /// Filesystem failure, carrying the path that failed.
    #[error("io error at {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// Malformed manifest or JSON input.
    #[error("parse error at {path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    /// A loss term left the finite range during training.
    #[error("non-finite loss in term `{term}` at epoch {epoch} iter {iter}")]
    NonFinite {
        term: String,
        epoch: usize,
        iter: usize,
    },

    /// Checkpoint does not match the model built from the config.
    #[error("checkpoint mismatch: {0}")]
    CheckpointMismatch(String),

    /// Tensor shape disagreement, named by dims.
    #[error("shape mismatch: {0}")]
    Shape(String),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    /// Documented CLI exit codes: 2 config, 3 I/O, 4 non-finite loss,
    /// 5 checkpoint mismatch.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Shape(_) => 2,
            Error::Io { .. } | Error::Parse { .. } => 3,
            Error::NonFinite { .. } => 4,
            Error::CheckpointMismatch(_) => 5,
        }
    }

    /// Short machine-readable kind for the structured stderr line.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Config(_) => "config",
            Error::Io { .. } => "io",
            Error::Parse { .. } => "parse",
            Error::NonFinite { .. } => "non_finite_loss",
            Error::CheckpointMismatch(_) => "checkpoint_mismatch",
            Error::Shape(_) => "shape",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
