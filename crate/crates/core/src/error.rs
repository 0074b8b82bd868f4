use thiserror::Error;

/// Errors produced by the group arithmetic and the drivers built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in group arithmetic")]
    Overflow,

    #[error("layer parameter mismatch: expected {expected} coordinates, found {found}")]
    ParamMismatch { expected: usize, found: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// An explicit sequence list is too short to answer a query soundly.
    #[error("cannot certify layer bound: layer {needed} is required but only {available} layers are defined")]
    BoundNotCertified { needed: usize, available: usize },

    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("walk precondition violated: {0}")]
    WalkPrecondition(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
