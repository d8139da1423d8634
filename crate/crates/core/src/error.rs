use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the domain of the function.
    #[error("domain error: {0}")]
    Domain(String),

    /// Result would exceed the representable range.
    #[error("overflow: {0}")]
    Overflow(String),

    /// Result is too small to represent.
    #[error("underflow: {0}")]
    Underflow(String),

    /// The zero scan failed to find a sign change where one was expected.
    #[error("bracket failure: {0}")]
    BracketFailure(String),

    /// The sign of a coupling contradicts the existence of a bound state.
    #[error("sign error: {0}")]
    Sign(String),

    /// Caller violated a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
