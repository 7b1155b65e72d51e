use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size limit exceeded while enumerating {what} (budget {limit})")]
    SizeLimitExceeded { what: String, limit: usize },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("inconsistency: {0}")]
    Inconsistency(String),
    #[error("certificate failure: {0}")]
    CertificateFailure(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
