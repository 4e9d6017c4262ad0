use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input violates a structural bound (zero rank, genus < 2, value out of range).
    #[error("invalid {what}: {reason}")]
    InvalidInput { what: &'static str, reason: String },

    /// A precondition of the requested operation does not hold.
    #[error("domain error: {0}")]
    Domain(String),

    /// The operation is developed for mu1 >= mu2; the caller should pass the dual type.
    #[error("mu1 < mu2 for type {0}; apply duality (n2, n1, -d2, -d1) first")]
    NeedsDual(String),

    /// An enumeration would produce more items than the configured limit.
    #[error("{what} would produce {count} items, above the limit of {limit}")]
    TooLarge { what: &'static str, count: u128, limit: u128 },

    #[error("cannot parse rational: {0}")]
    ParseRational(String),

    #[error("cannot parse {what}: {reason}")]
    Parse { what: &'static str, reason: String },
}

impl Error {
    pub(crate) fn invalid(what: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidInput { what, reason: reason.into() }
    }
}
