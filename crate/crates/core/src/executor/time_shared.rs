use num_traits::Zero;

use crate::metrics::makespan;
use crate::model::{AssignmentPlan, CloudletId, Scenario, Schedule, ScheduleEntry};
use crate::rational::{int, Rational};

use super::{check_plan, ExecError, ExecutionMode, ExecutionModel};

#[derive(Debug, Clone, Copy, Default)]
pub struct TimeShared;

impl ExecutionModel for TimeShared {
    fn mode(&self) -> ExecutionMode {
        ExecutionMode::TimeShared
    }

    fn run(&self, scenario: &Scenario, plan: &AssignmentPlan) -> Result<Schedule, ExecError> {
        run_time_shared(scenario, plan)
    }
}

/// Ideal processor sharing: every cloudlet bound to a VM starts at zero and, while `n` of
/// them are unfinished, each progresses at `mips / n`. Zero switching cost.
pub fn run_time_shared(scenario: &Scenario, plan: &AssignmentPlan) -> Result<Schedule, ExecError> {
    check_plan(scenario, plan)?;
    let mut finish: Vec<Option<Rational>> = vec![None; scenario.cloudlet_count()];
    for vm in scenario.vms() {
        let mut active: Vec<(CloudletId, Rational)> = plan
            .steps
            .iter()
            .filter(|s| s.vm == vm.id)
            .map(|s| {
                (
                    s.cloudlet,
                    scenario.cloudlets()[s.cloudlet.0].file_size.clone(),
                )
            })
            .collect();
        let mut now = Rational::zero();
        while !active.is_empty() {
            let share = &vm.mips / int(active.len() as i64);
            let step_work = active
                .iter()
                .map(|(_, left)| left)
                .min()
                .cloned()
                .expect("non-empty");
            now += &step_work / &share;
            active.retain_mut(|(cloudlet, left)| {
                *left -= &step_work;
                if left.is_zero() {
                    finish[cloudlet.0] = Some(now.clone());
                    false
                } else {
                    true
                }
            });
        }
    }

    let entries = plan
        .steps
        .iter()
        .map(|step| ScheduleEntry {
            cloudlet: step.cloudlet,
            vm: step.vm,
            start: Rational::zero(),
            finish: finish[step.cloudlet.0]
                .clone()
                .expect("every bound cloudlet finishes"),
        })
        .collect();
    let mut schedule = Schedule {
        entries,
        mode: ExecutionMode::TimeShared,
        makespan: Rational::zero(),
    };
    schedule.makespan = makespan(&schedule);
    Ok(schedule)
}
