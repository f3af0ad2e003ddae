use thiserror::Error;

/// Errors shared across the library surface.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("position {position} out of range 1..={arity}")]
    PositionOutOfRange { position: u32, arity: u32 },

    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: u32, got: u32 },

    #[error("cannot compose {left} with {right}: operator kinds differ")]
    MixedComposition {
        left: &'static str,
        right: &'static str,
    },

    #[error("invalid {what}: {message}")]
    Invalid { what: &'static str, message: String },

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("unknown letter {letter:?}")]
    UnknownLetter { letter: String },

    #[error("quotient precondition violated: {0}")]
    QuotientPrecondition(String),

    #[error("enumeration guard: k = {k} exceeds the desk-scale limit {limit} (pass override to force)")]
    EnumerationGuard { k: u32, limit: u32 },

    #[error("unknown operator family {name:?}")]
    UnknownFamily { name: String },
}

impl Error {
    pub fn invalid(what: &'static str, message: impl Into<String>) -> Self {
        Error::Invalid {
            what,
            message: message.into(),
        }
    }

    pub fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
