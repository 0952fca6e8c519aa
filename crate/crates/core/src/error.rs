use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands live in different coefficient rings (e.g. Z[ζ₃] vs Z[ζ₅]).
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Constant term is not a unit, so the series has no inverse.
    #[error("series is not invertible: constant term {0} is not a unit")]
    NotInvertible(String),

    /// A cyclotomic value with a nonzero ζ-component was asked to become an integer.
    #[error("not a rational integer: {0}")]
    NotRationalInteger(String),

    #[error("resource limit exceeded: requested {requested}, cap is {cap}")]
    Resource { requested: usize, cap: usize },

    #[error("domain error: {0}")]
    Domain(String),

    /// An identity that holds by construction failed. Indicates a bug.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
