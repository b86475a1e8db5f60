use thiserror::Error;

use crate::polyarith::Rat;

/// Which argument of a two-polynomial operation an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operand {
    G,
    F,
}

impl std::fmt::Display for Operand {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Operand::G => f.write_str("g"),
            Operand::F => f.write_str("f"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("{0} is undefined for the zero polynomial")]
    ZeroPolynomial(&'static str),

    #[error("semilength {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: u32, cap: u32 },

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("k = {k} is outside the fixed-n recurrence range 1..={max} for n = {n}")]
    OutsideRecurrenceRange { n: i64, k: i64, max: i64 },

    #[error("endpoint {0} is a root; perturb the interval")]
    EndpointIsRoot(Rat),

    #[error("polynomial {0} is not real-rooted")]
    NotRealRooted(Operand),

    #[error("polynomial {0} has a negative coefficient")]
    NegativeCoefficient(Operand),

    #[error("empty polynomial sequence")]
    EmptySequence,

    #[error("expected {expected} recurrence multipliers, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("at index {index}: {source}")]
    AtIndex {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    /// An exactness guarantee was violated. This is a bug, never a user error.
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

impl Error {
    pub fn at(self, index: usize) -> Error {
        Error::AtIndex {
            index,
            source: Box::new(self),
        }
    }

    /// True if this error (or the one it wraps) signals a broken invariant.
    pub fn is_internal(&self) -> bool {
        match self {
            Error::Internal(_) => true,
            Error::AtIndex { source, .. } => source.is_internal(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
