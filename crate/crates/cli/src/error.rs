use std::path::PathBuf;

use cobase_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{failed} of {total} checks failed")]
    Verification { failed: usize, total: usize },
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> CliError {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// 2: configuration or construction, 3: a cap was hit, 4: a check failed.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(
                CoreError::CapExceeded { .. } | CoreError::TupleSpaceTooLarge { .. },
            ) => 3,
            CliError::Config(_) | CliError::Core(_) => 2,
            CliError::Io { .. } => 1,
            CliError::Verification { .. } => 4,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
