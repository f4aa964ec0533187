use sbo_core::SboError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags or parameter combinations; exit code 2.
    #[error("{0}")]
    Usage(String),

    /// A library call rejected its input; also a usage problem.
    #[error(transparent)]
    Core(#[from] SboError),

    #[error("could not encode output: {0}")]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Core(_) => 2,
            CliError::Json(_) | CliError::Io(_) => 1,
        }
    }
}

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}
