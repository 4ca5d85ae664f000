use crate::model::{AssignmentPlan, Scenario};

use super::greedy::{run_fixed_rule, GreedyRule};
use super::{AllocationPolicy, TieBreakMode};

#[derive(Debug, Clone, Copy, Default)]
pub struct MinMin;

impl AllocationPolicy for MinMin {
    fn name(&self) -> &'static str {
        "minmin"
    }

    fn description(&self) -> &'static str {
        "smallest best completion time first"
    }

    fn allocate(&self, scenario: &Scenario, tie_break: TieBreakMode) -> AssignmentPlan {
        min_min_allocate(scenario, tie_break)
    }
}

/// Each round binds the pending cloudlet with the globally smallest best completion time to
/// the VM achieving it.
pub fn min_min_allocate(scenario: &Scenario, tie_break: TieBreakMode) -> AssignmentPlan {
    run_fixed_rule(scenario, tie_break, GreedyRule::MinMin)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{CloudletId, VmId};
    use crate::rational::{int, ratio};

    fn table1() -> Scenario {
        Scenario::from_ints(&[10, 20], &[10, 20, 30, 90]).unwrap()
    }

    fn pairs(plan: &AssignmentPlan) -> Vec<(usize, usize)> {
        plan.bindings()
            .into_iter()
            .map(|(c, v)| (c.0, v.0))
            .collect()
    }

    #[test]
    fn table1_min_execution_tie_break_piles_onto_vm1() {
        let plan = min_min_allocate(&table1(), TieBreakMode::MinExecution);
        assert_eq!(pairs(&plan), vec![(0, 1), (1, 1), (2, 1), (3, 1)]);
        assert_eq!(plan.steps[3].predicted_completion, ratio(15, 2));
    }

    #[test]
    fn table1_first_instantiated_tie_break() {
        let plan = min_min_allocate(&table1(), TieBreakMode::FirstInstantiated);
        assert_eq!(pairs(&plan), vec![(0, 1), (1, 1), (2, 0), (3, 1)]);
        // T2 ties at 3.0 on both VMs
        assert_eq!(plan.steps[2].predicted_completion, int(3));
        assert_eq!(plan.steps[3].predicted_completion, int(6));
    }

    #[test]
    fn single_cloudlet_goes_to_fastest_vm() {
        let s = Scenario::from_ints(&[10, 20], &[10]).unwrap();
        let plan = min_min_allocate(&s, TieBreakMode::default());
        assert_eq!(plan.bindings(), vec![(CloudletId(0), VmId(1))]);
        assert_eq!(plan.steps[0].predicted_completion, ratio(1, 2));
    }

    #[test]
    fn equal_cloudlets_break_ties_by_id() {
        let s = Scenario::from_ints(&[1, 1], &[4, 4, 4]).unwrap();
        let plan = min_min_allocate(&s, TieBreakMode::default());
        assert_eq!(pairs(&plan), vec![(0, 0), (1, 1), (2, 0)]);
    }

    #[test]
    fn evaluation_count_is_quadratic() {
        let s = Scenario::from_ints(&[1, 2, 3], &[5; 8]).unwrap();
        // v * (c + (c-1) + ... + 1)
        assert_eq!(
            min_min_allocate(&s, TieBreakMode::default()).completion_evaluations,
            3 * 36
        );
    }
}
