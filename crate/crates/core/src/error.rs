use thiserror::Error;

/// Errors produced while reading graphs or running solvers.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed edge-list input. `line` is 1-based.
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The input violates a precondition of the requested operation
    /// (wrong graph class, disconnected graph, invalid vertex id, ...).
    #[error("{0}")]
    Domain(String),

    /// The operation was refused because it would exceed a size cap.
    #[error("refused: {0}")]
    Refused(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(message: impl Into<String>) -> Self {
        Error::Domain(message.into())
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
