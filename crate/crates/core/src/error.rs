use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the library.
///
/// The variants mirror how callers are expected to react: `Argument` and
/// `Config` are caller mistakes, `Domain` flags a request outside the
/// mathematically supported range, `Numeric` a failed computation, and the
/// remaining variants carry I/O context.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated a documented precondition.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A configuration value (window size, replication count, ...) is
    /// inconsistent with the rest of the setup.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// The requested quantity is not defined for these parameters.
    #[error("domain error: {0}")]
    Domain(String),

    /// A numerical routine failed to reach its accuracy target.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// A data file could not be parsed.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An underlying I/O operation failed.
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
