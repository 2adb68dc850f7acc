use std::fmt;

/// Errors shared across the crate.
///
/// Exhaustion of a bounded search is never an error; searches return
/// `Option`/outcome types instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input violates a documented precondition.
    InvalidInput(String),
    /// The request is well formed but outside the supported scope.
    UnsupportedScope(String),
    /// A hard resource cap (closure size, enumeration size) was exceeded.
    Resource(String),
    /// A corpus file violated the schema; carries a row locator when known.
    Schema { locator: String, message: String },
    /// A computation finished only partially; carries what is unresolved.
    PartialResult(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(m) => write!(f, "invalid input: {m}"),
            Error::UnsupportedScope(m) => write!(f, "unsupported scope: {m}"),
            Error::Resource(m) => write!(f, "resource cap exceeded: {m}"),
            Error::Schema { locator, message } => write!(f, "schema error at {locator}: {message}"),
            Error::PartialResult(m) => write!(f, "partial result: {m}"),
        }
    }
}

impl std::error::Error for Error {}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::UnsupportedScope(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}
