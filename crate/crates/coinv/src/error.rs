//! Shared error type. Most operations are total on valid data; errors are
//! precondition violations, resource guards, or internal consistency
//! failures that indicate a bug rather than bad input.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A precondition on the inputs was violated.
    Invalid(String),
    /// Equal-degree / equal-size requirements for comparisons and gradings.
    SizeMismatch { left: usize, right: usize },
    /// A desk-scale resource guard tripped.
    ResourceLimit(String),
    /// Exact arithmetic produced something structurally impossible
    /// (e.g. a non-integer multiplicity); signals an implementation bug.
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Invalid(msg) => write!(f, "invalid input: {msg}"),
            Error::SizeMismatch { left, right } => {
                write!(f, "size mismatch: {left} vs {right}")
            }
            Error::ResourceLimit(msg) => write!(f, "resource guard: {msg}"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
