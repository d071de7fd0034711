use std::fmt;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Position of a parse failure inside a text input (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error at {location}: {message}")]
    Parse { location: Location, message: String },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("weight mismatch: expected {expected}, found {found}")]
    WeightMismatch { expected: usize, found: usize },

    #[error("{what} exceeds the cap of {cap} (reached {reached})")]
    CapExceeded {
        what: &'static str,
        cap: u128,
        reached: u128,
    },

    #[error("the permutation set is empty")]
    EmptySet,

    #[error("the permutation set is not closed under composition")]
    NotAGroup,

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            location: Location { line, column },
            message: message.into(),
        }
    }

    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::Invalid(message.into())
    }

    pub(crate) fn internal(message: impl Into<String>) -> Self {
        Error::Internal(message.into())
    }

    /// Process exit status the command-line front end reports for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } | Error::Overflow(_) => 2,
            Error::Internal(_) => 3,
            _ => 1,
        }
    }
}
