//! Catalog, report formats and verification runs on top of `orbicusp-core`.

pub mod catalog;
pub mod report;
pub mod run;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] orbicusp_core::Error),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("output: {0}")]
    Output(String),
}

impl CliError {
    /// `2` for bad input, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(_) | CliError::Input(_) => 2,
            CliError::Output(_) => 1,
        }
    }
}
