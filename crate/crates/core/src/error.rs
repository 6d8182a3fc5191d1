use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input violates an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),
    /// Two computations that must agree did not (wrong genus, regulator, ...).
    #[error("inconsistency: {0}")]
    Inconsistency(String),
    /// A prime fell into a case the P-signature rules do not cover.
    #[error("classification gap: {0}")]
    ClassificationGap(String),
    /// The requested computation exceeds the supported size.
    #[error("resource refusal: {0}")]
    ResourceRefusal(String),
    /// The error bound is too large for the interval radius to be meaningful.
    #[error("bound unusable: psi = {0} >= 1")]
    BoundUnusable(f64),
    /// Max measure with an empty interval.
    #[error("undefined measure: {0}")]
    UndefinedMeasure(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
