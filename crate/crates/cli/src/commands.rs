use std::thread;

use cloudlet_core::executor::{ExecError, ExecutionMode};
use cloudlet_core::model::Scenario;
use cloudlet_core::oracle::{optimal_assignment_with_budget, OracleError};
use cloudlet_core::policies::{PolicyError, PolicyRegistry, TieBreakMode};
use thiserror::Error;

use crate::report::RunReport;
use crate::scenario_file::ScenarioFileError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Policy(#[from] PolicyError),
    #[error("cannot read scenario {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Scenario(#[from] ScenarioFileError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Exec(#[from] ExecError),
}

impl CliError {
    /// 1 usage, 2 scenario, 3 oracle budget.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Policy(_) => 1,
            CliError::Io { .. } | CliError::Scenario(_) => 2,
            CliError::Oracle(_) => 3,
            // plans built here always cover the scenario
            CliError::Exec(_) => 1,
        }
    }
}

pub fn run_command(
    scenario: &Scenario,
    policy: &str,
    mode: ExecutionMode,
    tie_break: TieBreakMode,
) -> Result<RunReport, CliError> {
    let registry = PolicyRegistry::builtin();
    let policy = registry.require(policy)?;
    let plan = policy.allocate(scenario, tie_break);
    let schedule = mode.executor().run(scenario, &plan)?;
    Ok(RunReport::new(
        policy.name(),
        tie_break,
        scenario,
        &plan,
        &schedule,
    ))
}

/// Runs the optimal plan under `mode`. The plan optimizes space-shared makespan, which equals
/// the time-shared makespan of the same plan.
pub fn oracle_command(
    scenario: &Scenario,
    mode: ExecutionMode,
    budget: u64,
) -> Result<RunReport, CliError> {
    let optimal = optimal_assignment_with_budget(scenario, budget)?;
    let schedule = mode.executor().run(scenario, &optimal.plan)?;
    Ok(RunReport::new(
        "oracle",
        TieBreakMode::default(),
        scenario,
        &optimal.plan,
        &schedule,
    ))
}

/// Every registered policy in registration order, then the oracle when the instance fits
/// the budget. Policies run on separate threads; output order is fixed.
pub fn compare_command(
    scenario: &Scenario,
    mode: ExecutionMode,
    tie_break: TieBreakMode,
    budget: u64,
) -> Result<Vec<RunReport>, CliError> {
    let registry = PolicyRegistry::builtin();
    let mut reports = thread::scope(|scope| {
        let handles: Vec<_> = registry
            .iter()
            .map(|policy| {
                scope.spawn(move || -> Result<RunReport, CliError> {
                    let plan = policy.allocate(scenario, tie_break);
                    let schedule = mode.executor().run(scenario, &plan)?;
                    Ok(RunReport::new(
                        policy.name(),
                        tie_break,
                        scenario,
                        &plan,
                        &schedule,
                    ))
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("policy thread panicked"))
            .collect::<Result<Vec<_>, _>>()
    })?;
    match oracle_command(scenario, mode, budget) {
        Ok(report) => reports.push(report),
        Err(CliError::Oracle(OracleError::BudgetExceeded { .. })) => {}
        Err(other) => return Err(other),
    }
    Ok(reports)
}
