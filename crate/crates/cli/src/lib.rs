//! Scenario files, report generation and the `run` / `compare` / `oracle` commands behind the
//! `cloudlet` binary.

pub mod commands;
pub mod render;
pub mod report;
pub mod scenario_file;

pub use commands::{compare_command, oracle_command, run_command, CliError};
pub use report::RunReport;
pub use scenario_file::{parse_scenario, scenario_to_json};
