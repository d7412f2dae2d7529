use num_complex::Complex64;
use thiserror::Error;

use crate::matcore::format_complex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("numerical failure: {0}")]
    Numeric(String),

    #[error("function undefined at {}", format_complex(*.point, 1e-9))]
    Domain { point: Complex64 },

    #[error(
        "function value {} at root {} is not unimodular",
        format_complex(*.value, 1e-9),
        format_complex(*.root, 1e-9)
    )]
    Unimodularity { root: Complex64, value: Complex64 },

    #[error("malformed polynomial: {0}")]
    Form(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("inconsistent synthesis bundle: {0}")]
    Consistency(String),

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
