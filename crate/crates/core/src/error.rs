use thiserror::Error;

/// Errors produced by parsing, validation and the budgeted constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("{0}")]
    Semantic(String),

    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: String, right: String },

    #[error("profile dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("{relation}: class budget of {budget} exceeded ({explored} classes explored)")]
    BudgetExceeded {
        relation: &'static str,
        budget: usize,
        explored: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn syntax(line: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn semantic(message: impl Into<String>) -> Self {
        Error::Semantic(message.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
