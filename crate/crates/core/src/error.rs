use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("incompatible operands: {0}")]
    Incompatible(String),

    #[error("degree {degree} exceeds truncation {truncation}")]
    TruncationOverflow { degree: usize, truncation: usize },

    #[error("not invertible: degree-0 value {0} is not a unit")]
    NotInvertible(String),

    #[error("argument is not in the augmentation ideal: degree-0 value is {0}")]
    NotInAugmentationIdeal(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("ring `{0}` does not contain the rationals")]
    UnsupportedRing(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    /// Mathematical domain errors, as opposed to malformed input.
    pub fn is_domain(&self) -> bool {
        !matches!(self, Error::Parse { .. } | Error::ResourceLimit(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
