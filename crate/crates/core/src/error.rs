use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("step count must be at least 1")]
    ZeroStep,

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("not a multipartite tournament: vertices {u} and {v} {reason}")]
    NotMultipartiteTournament { u: usize, v: usize, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("vertex set does not induce a nontrivial strong component")]
    NotStrong,

    #[error("vertex sets overlap at vertex {0}")]
    Overlap(usize),

    #[error("no repeated state within {steps} steps")]
    BudgetExhausted { steps: usize },

    #[error("inconsistent analysis input: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn parse_at(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            location: format!("line {line}, column {column}"),
            message: message.into(),
        }
    }

    pub(crate) fn parse_in(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
