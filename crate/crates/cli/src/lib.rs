//! Scenario-driven front end: JSON scenarios in, deterministic reports,
//! OBJ meshes, CSV sweeps and case tables out.

pub mod case_table;
pub mod mesh;
pub mod report;
pub mod scenario;
pub mod sweep;

use thiserror::Error;

pub use case_table::export_case_table;
pub use mesh::export_mesh;
pub use report::run_scenario;
pub use scenario::{BuiltScenario, Overrides, Scenario};
pub use sweep::export_sweep;

/// Front-end failures, split by exit code: configuration problems exit with
/// 2, numeric degeneracies fatal to the requested output with 3.
#[derive(Error, Debug)]
pub enum CliError {
    #[error("invalid scenario: {0}")]
    Config(String),
    #[error("numeric degeneracy: {0}")]
    Numeric(#[from] drall_core::Error),
    #[error("io: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) | CliError::Io(_) => 2,
            CliError::Numeric(_) => 3,
        }
    }
}
