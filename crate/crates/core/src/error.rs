use thiserror::Error;

use crate::chain::CellId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The caller violated a documented precondition.
    #[error("usage error: {0}")]
    Usage(String),

    /// A structural identity that must hold (∂∂ = 0, a cycle is never created, ...) failed.
    #[error("integrity error: {0}")]
    Integrity(String),

    /// The pipeline needs a single 26-connected foreground component.
    #[error("the foreground has {0} connected components, expected 1")]
    Disconnected(usize),

    #[error("unknown cell {0}")]
    UnknownCell(CellId),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn integrity(msg: impl Into<String>) -> Self {
        Error::Integrity(msg.into())
    }

    pub(crate) fn parse(line: usize, column: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: msg.into(),
        }
    }
}
