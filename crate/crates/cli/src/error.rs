use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Io(_) => 2,
            CliError::Invalid(_) => 3,
        }
    }

    pub fn io(context: impl std::fmt::Display, err: std::io::Error) -> Self {
        CliError::Io(format!("{context}: {err}"))
    }
}

impl From<sdft_core::Error> for CliError {
    fn from(err: sdft_core::Error) -> Self {
        CliError::Invalid(err.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
