use thiserror::Error;

/// Errors raised by the exact-arithmetic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("context mismatch: {0}")]
    ContextMismatch(String),

    #[error("not in GSpin: {0}")]
    NotInGSpin(String),

    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("outside the domain of convergence: {0}")]
    Domain(String),

    #[error("field error: {0}")]
    Field(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("element is not semisimple")]
    NotSemisimple,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn arg<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Argument(msg.into()))
}
