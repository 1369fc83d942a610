use thiserror::Error;

use crate::numerics::Convention;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("convention mismatch: expected {expected}, found {found}")]
    ConventionMismatch {
        expected: &'static str,
        found: Convention,
    },

    #[error("length mismatch: {0}")]
    LengthMismatch(String),

    #[error("unsupported length {len}: {reason}")]
    UnsupportedLength { len: usize, reason: &'static str },

    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
