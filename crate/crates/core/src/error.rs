use thiserror::Error;

use crate::domain::Subset;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid label list: {0}")]
    Labels(String),

    #[error("matrix is singular")]
    Singular,

    /// The principal block `A[X]` has a zero determinant, so `A*X` does not exist.
    #[error("pivot undefined: A[{subset}] singular")]
    PivotUndefined { subset: Subset },

    /// Second stage of a composition `(A*X)*Y` failed.
    #[error("pivot undefined at stage {stage}: block on {subset} singular")]
    CompositionUndefined { stage: u8, subset: Subset },

    #[error("elementary pivot undefined: {0}")]
    ElementaryUndefined(String),

    #[error("domain of size {size} exceeds the limit of {cap} labels for {what}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },

    #[error("orbit exceeds the cap of {cap} graphs")]
    OrbitOverflow { cap: usize },

    #[error("invalid double occurrence string: {0}")]
    InvalidString(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },

    #[error("field mismatch")]
    FieldMismatch,

    #[error("{0}")]
    Precondition(String),
}

impl Error {
    /// True for errors caused by malformed input rather than by mathematics.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::Labels(_)
                | Error::InvalidString(_)
                | Error::DomainMismatch(_)
                | Error::Dimension { .. }
                | Error::FieldMismatch
                | Error::CapExceeded { .. }
        )
    }
}
