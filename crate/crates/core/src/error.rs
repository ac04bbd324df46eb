use std::path::PathBuf;

use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: line {line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("invalid graph data: {0}")]
    Validation(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("refusing to enumerate 2^{edges} possible worlds (limit is {limit} edges)")]
    TooManyWorlds { edges: usize, limit: usize },

    #[error("query selection failed: {0}")]
    Strategy(String),

    #[error("query selection infeasible: {0}")]
    SelectionInfeasible(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv output error: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for errors caused by the input graph data rather than by configuration.
    pub fn is_data_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::Validation(_) | Error::Io { .. } | Error::UnknownVertex(_)
        )
    }
}
