use thiserror::Error;

/// Errors reported by the exact-arithmetic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on the inputs does not hold.
    #[error("{0}")]
    Domain(String),
    /// An exact integer computation left the representable range.
    #[error("arithmetic overflow in exact integer computation")]
    Overflow,
    /// An internal consistency check failed; this is a bug, not a user error.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
