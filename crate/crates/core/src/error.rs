use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// Table shape or entries do not describe a total operation on `0..size`.
    #[error("structural error: {0}")]
    Structural(String),
    /// A fact that must hold in every skew lattice failed; the input was not one.
    #[error("internal inconsistency: {message} (witness {witness:?})")]
    Inconsistent {
        message: String,
        witness: Vec<usize>,
    },
    /// An operation was called outside the hypotheses it needs.
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource budget exceeded: {0}")]
    Resource(String),
}

impl AlgebraError {
    pub(crate) fn inconsistent(message: impl Into<String>, witness: Vec<usize>) -> Self {
        AlgebraError::Inconsistent {
            message: message.into(),
            witness,
        }
    }

    pub(crate) fn domain(message: impl Into<String>) -> Self {
        AlgebraError::Domain(message.into())
    }
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
