use std::io;
use std::path::PathBuf;

use crate::Status;

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("invalid config: {0}")]
    Config(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("{}: {source}", path.display())]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },

    #[error("malformed JSON: {0}")]
    Json(String),
}

impl HarnessError {
    pub fn config(msg: impl Into<String>) -> Self {
        HarnessError::Config(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        HarnessError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn status(&self) -> Status {
        match self {
            HarnessError::Config(_) | HarnessError::Json(_) => Status::InvalidConfig,
            HarnessError::Io { .. } | HarnessError::Csv { .. } => Status::Io,
        }
    }
}

impl From<hconv_core::Error> for HarnessError {
    fn from(e: hconv_core::Error) -> Self {
        HarnessError::Config(e.to_string())
    }
}
