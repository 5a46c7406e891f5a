use thiserror::Error;

/// Errors raised by the coefficient-bound toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A division by a vanishing quantity would be required.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// A derived quantity left its admissible range.
    #[error("consistency check failed: {0}")]
    Consistency(String),

    /// The requested parameter is outside the range where a bound is proved.
    #[error("unsupported parameter: {0}")]
    Unsupported(String),

    /// A root bracket could not be established or was ambiguous.
    #[error("bracket failure: {0}")]
    Bracket(String),
}

pub type Result<T> = std::result::Result<T, Error>;
