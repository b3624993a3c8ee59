use alloc::string::String;
use core::fmt;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A precondition on the inputs was violated.
    InvalidInput(String),
    /// An enumeration guard refused a state space that is too large.
    Guard { what: &'static str, limit: usize, got: usize },
    /// A structural search did not produce the requested object.
    NotFound(&'static str),
    /// Two supposedly-equivalent computation routes disagree.
    Inconsistent(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::Guard { what, limit, got } => {
                write!(f, "{what} guard exceeded: limit {limit}, got {got}")
            }
            Error::NotFound(what) => write!(f, "not found: {what}"),
            Error::Inconsistent(msg) => write!(f, "internal consistency error: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
