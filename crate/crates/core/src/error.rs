//! Error type shared across the library.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },

    #[error("invalid ring specification: {0}")]
    InvalidRing(String),

    #[error("division by zero polynomial")]
    ZeroDivisor,

    #[error("missing substitution image for variable `{0}`")]
    MissingImage(String),

    #[error("non-homogeneous generator in graded mode: {0}")]
    NotHomogeneous(String),

    #[error("denominator ideal is not contained in the numerator: {0}")]
    NotContained(String),

    #[error("not a reduction within {0} steps")]
    CapExceeded(u64),

    #[error("hypothesis check failed: {0}")]
    HypothesisFailed(String),

    #[error("colon membership precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("oracle slack insufficient: {0}; increase the internal-degree slack")]
    SlackInsufficient(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
