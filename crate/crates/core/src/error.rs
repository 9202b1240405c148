use thiserror::Error;

/// Errors produced while loading inputs or running a diagram computation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },

    #[error("line {line}: vertex id {id} out of range 1..={n}")]
    Range { line: usize, id: i64, n: usize },

    #[error("{0}")]
    Domain(String),

    #[error("{0}")]
    Budget(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
