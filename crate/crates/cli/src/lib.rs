//! Command-line front end for `spheremap`: a catalog of named maps, JSON map
//! files, and JSON or text reports for each analysis.
//!
//! Exit codes: 0 success, 1 malformed input, 2 not a sphere map, 3
//! inconclusive (partial report printed), 4 internal consistency failure.

pub mod catalog;
mod commands;
mod render;
pub mod report;

pub use commands::{analyze, run, Cli, Command, Outcome};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Malformed(String),
    #[error("not a sphere map: {0}")]
    NotSphereMap(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Malformed(_) => 1,
            CliError::NotSphereMap(_) => 2,
            CliError::Inconclusive(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

impl From<spheremap::Error> for CliError {
    fn from(e: spheremap::Error) -> Self {
        use spheremap::Error as E;
        match e {
            E::Certification(_) => CliError::Inconclusive(e.to_string()),
            E::IdentityFailure(_) | E::Infeasible(_) => CliError::Internal(e.to_string()),
            _ => CliError::Malformed(e.to_string()),
        }
    }
}
