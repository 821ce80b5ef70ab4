use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or empty input.
    #[error("input error: {0}")]
    Input(String),

    #[error("generators have gcd {0}; the generated semigroup is not cofinite")]
    NotCofinite(u64),

    /// An element does not belong to the ground semigroup it was asserted to lie in.
    #[error("{element} is not an element of the ground semigroup {ground}")]
    GroundViolation { element: i64, ground: String },

    #[error("operands live over different ground semigroups ({left} vs {right})")]
    GroundMismatch { left: String, right: String },

    #[error("threshold {threshold} exceeds the configured maximum {max}")]
    ThresholdOverflow { threshold: usize, max: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A configured size limit was hit before any work was done.
    #[error("cap exceeded: {what} is {actual}, cap is {cap}")]
    CapExceeded { what: &'static str, actual: usize, cap: usize },

    #[error("unknown strategy `{0}`")]
    UnknownStrategy(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// True for errors caused by size limits rather than bad input.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::ThresholdOverflow { .. })
    }
}
