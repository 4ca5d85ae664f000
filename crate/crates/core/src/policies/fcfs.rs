use crate::metrics::{execution_matrix, VmReadyTimes};
use crate::model::{AssignmentPlan, AssignmentStep, DecidedBy, Scenario, VmId};

use super::{AllocationPolicy, TieBreakMode};

/// Round-robin by arrival order: cloudlet `i` goes to VM `i mod v`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Fcfs;

impl AllocationPolicy for Fcfs {
    fn name(&self) -> &'static str {
        "fcfs"
    }

    fn description(&self) -> &'static str {
        "first come first served, round-robin over VMs by arrival index"
    }

    fn allocate(&self, scenario: &Scenario, _tie_break: TieBreakMode) -> AssignmentPlan {
        fcfs_allocate(scenario)
    }
}

pub fn fcfs_allocate(scenario: &Scenario) -> AssignmentPlan {
    let exe = execution_matrix(scenario);
    let mut ready = VmReadyTimes::idle(scenario.vm_count());
    let steps = scenario
        .cloudlets()
        .iter()
        .map(|c| {
            let vm = VmId(c.id.0 % scenario.vm_count());
            ready.push_work(vm, exe.get(c.id, vm));
            AssignmentStep {
                cloudlet: c.id,
                vm,
                decided_by: DecidedBy::Fcfs,
                predicted_completion: ready.get(vm).clone(),
                decision: None,
            }
        })
        .collect();
    AssignmentPlan {
        steps,
        completion_evaluations: 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::CloudletId;
    use crate::rational::ratio;

    #[test]
    fn table2_round_robin() {
        let s = Scenario::from_ints(&[10, 20], &[12, 16, 50, 30, 20, 40]).unwrap();
        let plan = fcfs_allocate(&s);
        let on_vm0: Vec<usize> = plan
            .steps
            .iter()
            .filter(|st| st.vm == VmId(0))
            .map(|st| st.cloudlet.0)
            .collect();
        assert_eq!(on_vm0, vec![0, 2, 4]);
        assert_eq!(plan.steps[4].predicted_completion, ratio(82, 10));
        assert_eq!(plan.steps[5].predicted_completion, ratio(86, 20));
    }

    #[test]
    fn single_vm_takes_everything() {
        let s = Scenario::from_ints(&[7], &[1, 2, 3]).unwrap();
        assert!(fcfs_allocate(&s).steps.iter().all(|st| st.vm == VmId(0)));
    }

    #[test]
    fn two_by_two() {
        let s = Scenario::from_ints(&[5, 5], &[1, 1]).unwrap();
        assert_eq!(
            fcfs_allocate(&s).bindings(),
            vec![(CloudletId(0), VmId(0)), (CloudletId(1), VmId(1))]
        );
    }
}
