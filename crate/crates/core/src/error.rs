use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient list is empty")]
    EmptyCoefficients,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("invalid interval: {0}")]
    InvalidInterval(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
