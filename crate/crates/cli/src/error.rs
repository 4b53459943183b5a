// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{source_name}:{line}: {message}")]
    Malformed {
        source_name: String,
        line: usize,
        message: String,
    },
    #[error("invalid function `{0}`: not a permutation of 0..7")]
    InvalidFunction(String),
    #[error(transparent)]
    Synthesis(#[from] ncv_core::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit status for this failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Malformed { .. } => 2,
            CliError::InvalidFunction(_) => 3,
            CliError::Synthesis(ncv_core::Error::BudgetExceeded { .. }) => 4,
            CliError::Synthesis(ncv_core::Error::InvalidFunction) => 3,
            CliError::Synthesis(_) => 1,
            CliError::Io { .. } => 5,
        }
    }
}
