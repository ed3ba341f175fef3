use thiserror::Error;

/// Errors shared by every module. Each variant maps onto one CLI exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument error: {0}")]
    Argument(String),
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    #[error("consistency error: {0}")]
    Consistency(String),
    #[error("state error: {0}")]
    State(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("coset budget exceeded ({0} cosets)")]
    Budget(usize),
}

impl Error {
    /// Process exit code: 2 for bad input, 3 for integrality/consistency
    /// failures, 4 for an exhausted enumeration budget.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Consistency(_) => 3,
            Error::Budget(_) => 4,
            _ => 2,
        }
    }

    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
