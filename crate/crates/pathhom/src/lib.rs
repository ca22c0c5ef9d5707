//! File formats, reports, and verification suites behind the `pathhom`
//! command-line tool.

pub mod check;
pub mod formats;
pub mod report;

use thiserror::Error;

/// CLI-level errors. Each variant maps to a distinct exit code:
/// 0 ok, 2 input error, 3 resource cap, 4 property-suite failure,
/// 5 internal consistency failure.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Cap(String),
    #[error("{0}")]
    Suite(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Suite(_) => 4,
            CliError::Internal(_) => 5,
        }
    }
}

impl From<pathhom_core::Error> for CliError {
    fn from(e: pathhom_core::Error) -> Self {
        match e {
            pathhom_core::Error::CapExceeded { .. } => CliError::Cap(e.to_string()),
            pathhom_core::Error::Internal(_) | pathhom_core::Error::ChainMapEscape { .. } => {
                CliError::Internal(e.to_string())
            }
            other => CliError::Input(other.to_string()),
        }
    }
}
