use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] kmc_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("group file line {line}: {message}")]
    GroupFile { line: usize, message: String },
    #[error("{0}")]
    Input(String),
}

impl CliError {
    /// Exit status for a failed command: 2 when the subgroup does not satisfy
    /// the law, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(kmc_core::Error::HypothesisFailed) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
