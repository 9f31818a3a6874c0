use thiserror::Error;

/// Errors raised when a value does not fit the space it is used in.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WqoError {
    #[error("{value} is not an element of {space}")]
    NotAnElement { value: String, space: String },
    #[error("{value} is not an ideal of {space}")]
    NotAnIdeal { value: String, space: String },
    #[error("cannot combine an upward closed set with a downward closed set")]
    PolarityMismatch,
    #[error("symbol `{0}` is not declared")]
    DanglingSymbol(String),
    #[error("malformed ordinal: {0}")]
    MalformedOrdinal(String),
    #[error("ideal {0} is not adherent to the subspace")]
    NotAdherent(String),
    #[error("{0} has no enumerator")]
    MissingEnumerator(String),
}
