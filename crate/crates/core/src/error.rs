use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A size or order exceeded a configured limit.
    #[error("{what} exceeds the configured bound of {limit}")]
    Resource { what: String, limit: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// A bounded search stopped before covering its space.
    #[error("search inconclusive: {0}")]
    Inconclusive(String),

    /// An internal check of a constructed witness failed.
    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    pub(crate) fn resource(what: impl Into<String>, limit: usize) -> Self {
        Error::Resource {
            what: what.into(),
            limit,
        }
    }

    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
