use thiserror::Error;

/// Exit-code-carrying error for the command line.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags or an invalid configuration (exit 1).
    #[error("{0}")]
    Usage(String),
    /// Unreadable or invalid input, or unwritable output (exit 2).
    #[error("{0}")]
    Data(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
        }
    }
}

impl From<fxt_core::Error> for CliError {
    fn from(e: fxt_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<crate::wav::WavError> for CliError {
    fn from(e: crate::wav::WavError) -> Self {
        CliError::Data(e.to_string())
    }
}
