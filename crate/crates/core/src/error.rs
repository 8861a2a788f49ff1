use thiserror::Error;

/// Errors raised by the library. Everything except [`Error::Internal`] is a
/// problem with the caller's input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("not in L-space form: {0}")]
    NotLSpaceForm(String),

    #[error("non-monomial torsion: invariant factor {0} is not a power of U")]
    NonMonomialTorsion(String),

    #[error("not a knot complex: homology has free rank {0}, expected 1")]
    NotAKnotComplex(usize),

    #[error("bound unavailable: {0}")]
    BoundUnavailable(String),

    #[error("no non-orientable band in the move sequence")]
    NoNonorientableBand,

    #[error("internal invariant violation: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// True for violations of the library's own invariants, as opposed to
    /// bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
