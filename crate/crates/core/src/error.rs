use thiserror::Error;

/// Errors produced by every fallible operation in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{value} has no inverse modulo {modulus} (gcd is {gcd})")]
    NoInverse { value: i64, modulus: i64, gcd: i64 },

    #[error("method {method} requires exactly two denominations, got {got}")]
    MethodMismatch { method: &'static str, got: usize },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("resource ceiling exceeded: {what} needs {requested}, ceiling is {ceiling}")]
    ResourceLimit {
        what: &'static str,
        requested: u128,
        ceiling: u128,
    },

    #[error("no integer with exactly {k} representations at or below {horizon}")]
    NotFoundBelowHorizon { k: u64, horizon: i64 },

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
