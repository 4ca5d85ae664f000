use num_traits::Zero;

use crate::metrics::makespan;
use crate::model::{AssignmentPlan, Scenario, Schedule, ScheduleEntry};
use crate::rational::Rational;

use super::{check_plan, ExecError, ExecutionMode, ExecutionModel};

#[derive(Debug, Clone, Copy, Default)]
pub struct SpaceShared;

impl ExecutionModel for SpaceShared {
    fn mode(&self) -> ExecutionMode {
        ExecutionMode::SpaceShared
    }

    fn run(&self, scenario: &Scenario, plan: &AssignmentPlan) -> Result<Schedule, ExecError> {
        run_space_shared(scenario, plan)
    }
}

/// Runs each VM's cloudlets back to back in plan order, starting at zero.
pub fn run_space_shared(scenario: &Scenario, plan: &AssignmentPlan) -> Result<Schedule, ExecError> {
    check_plan(scenario, plan)?;
    let mut clock = vec![Rational::zero(); scenario.vm_count()];
    let entries = plan
        .steps
        .iter()
        .map(|step| {
            let size = &scenario.cloudlets()[step.cloudlet.0].file_size;
            let mips = &scenario.vms()[step.vm.0].mips;
            let start = clock[step.vm.0].clone();
            let finish = &start + size / mips;
            clock[step.vm.0] = finish.clone();
            ScheduleEntry {
                cloudlet: step.cloudlet,
                vm: step.vm,
                start,
                finish,
            }
        })
        .collect();
    let mut schedule = Schedule {
        entries,
        mode: ExecutionMode::SpaceShared,
        makespan: Rational::zero(),
    };
    schedule.makespan = makespan(&schedule);
    Ok(schedule)
}
