use thiserror::Error;

/// Errors raised by the exact Brill-Noether machinery.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the domain where the quantity is defined.
    #[error("domain error: {0}")]
    Domain(String),
    /// Two routes that must agree disagreed, or a guard fired.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    /// A wide intermediate would have wrapped.
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    /// The ledger file is malformed.
    #[error("ledger error: {0}")]
    Ledger(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn inconsistent<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Inconsistency(msg.into()))
}
