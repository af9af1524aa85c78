use thiserror::Error;

/// Errors raised by the library. Cap violations and failed internal
/// consistency checks are reported rather than silently degraded.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("{what} limit exceeded: {value} > {limit}")]
    LimitExceeded {
        what: &'static str,
        value: u128,
        limit: u128,
    },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("not a character: {0}")]
    NotACharacter(String),

    #[error("symmetry violation: {0}")]
    SymmetryViolation(String),

    #[error("axiom violation: {0}")]
    AxiomViolation(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::LimitExceeded { .. } => "limit_exceeded",
            Error::Invalid(_) => "invalid",
            Error::GroupMismatch(_) => "group_mismatch",
            Error::NotACharacter(_) => "not_a_character",
            Error::SymmetryViolation(_) => "symmetry_violation",
            Error::AxiomViolation(_) => "axiom_violation",
            Error::Internal(_) => "internal",
        }
    }
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}
