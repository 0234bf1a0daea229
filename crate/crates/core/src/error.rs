use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be non-negative, got {0}")]
    NegativeArgument(String),

    #[error("values are not those of a numerical polynomial: {0}")]
    InputNotNumericalPolynomial(String),

    /// A configured cap was hit. The payload names the offending computation.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),

    #[error("empty support: a constant has no leader")]
    EmptySupport,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
