use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parameter or input lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// A certificate or precondition witness did not verify.
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    /// The requested quantity is not finite.
    #[error("unbounded: {0}")]
    Unbounded(String),
    /// An exhaustive search hit its budget before finishing.
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
