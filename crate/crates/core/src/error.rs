use thiserror::Error;

/// Errors raised by ideal arithmetic, decomposition, certificates and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring context mismatch: {0}")]
    ContextMismatch(String),

    #[error("exponent overflow in variable #{index}")]
    ExponentOverflow { index: usize },

    #[error("operation requires a proper nonzero ideal, got the {0} ideal")]
    ImproperIdeal(&'static str),

    #[error("saturation did not stabilize after {0} colon steps")]
    SaturationDiverged(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("ideal has a single variable block; use symbolic_power directly")]
    SingleBlock,

    #[error("local witness {index} rejected: {reason}")]
    LocalWitness { index: usize, reason: String },

    #[error("certificate rejected: {0}")]
    CertificateRejected(String),

    #[error("bound check failed: {0}")]
    BoundViolation(String),

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("malformed JSON document: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json(err.to_string())
    }
}
