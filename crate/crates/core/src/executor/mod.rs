//! Execution models that turn an [`AssignmentPlan`] into a timed [`Schedule`].

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::model::{AssignmentPlan, Scenario, Schedule};

mod space_shared;
mod time_shared;

pub use space_shared::{run_space_shared, SpaceShared};
pub use time_shared::{run_time_shared, TimeShared};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum ExecutionMode {
    /// Cloudlets on a VM run one after another, each to completion.
    #[default]
    SpaceShared,
    /// Cloudlets on a VM run together, splitting its rate equally.
    TimeShared,
}

impl ExecutionMode {
    pub const ALL: [ExecutionMode; 2] = [ExecutionMode::SpaceShared, ExecutionMode::TimeShared];

    pub fn as_str(self) -> &'static str {
        match self {
            ExecutionMode::SpaceShared => "space",
            ExecutionMode::TimeShared => "time",
        }
    }

    pub fn executor(self) -> &'static dyn ExecutionModel {
        match self {
            ExecutionMode::SpaceShared => &SpaceShared,
            ExecutionMode::TimeShared => &TimeShared,
        }
    }
}

impl fmt::Display for ExecutionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown execution mode `{0}` (expected `space` or `time`)")]
pub struct UnknownMode(pub String);

impl FromStr for ExecutionMode {
    type Err = UnknownMode;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "space" | "space-shared" => Ok(ExecutionMode::SpaceShared),
            "time" | "time-shared" => Ok(ExecutionMode::TimeShared),
            other => Err(UnknownMode(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExecError {
    #[error("plan does not bind every cloudlet of the scenario exactly once to a known VM")]
    MalformedPlan,
}

pub trait ExecutionModel: Send + Sync {
    fn mode(&self) -> ExecutionMode;

    fn run(&self, scenario: &Scenario, plan: &AssignmentPlan) -> Result<Schedule, ExecError>;
}

fn check_plan(scenario: &Scenario, plan: &AssignmentPlan) -> Result<(), ExecError> {
    if plan.covers(scenario) {
        Ok(())
    } else {
        Err(ExecError::MalformedPlan)
    }
}
