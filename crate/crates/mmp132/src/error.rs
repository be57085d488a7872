use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] mmp132_core::Error),

    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("invalid integer {0:?}")]
    BadInteger(String),

    #[error("malformed OEIS id {0:?}: expected 'A' followed by six digits")]
    BadOeisId(String),

    #[error("{id} is unavailable: {reason}")]
    OeisUnavailable { id: String, reason: String },

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
