use crate::model::{AssignmentPlan, Scenario};

use super::greedy::{run_fixed_rule, GreedyRule};
use super::{AllocationPolicy, TieBreakMode};

#[derive(Debug, Clone, Copy, Default)]
pub struct MaxMin;

impl AllocationPolicy for MaxMin {
    fn name(&self) -> &'static str {
        "maxmin"
    }

    fn description(&self) -> &'static str {
        "largest best completion time first"
    }

    fn allocate(&self, scenario: &Scenario, tie_break: TieBreakMode) -> AssignmentPlan {
        max_min_allocate(scenario, tie_break)
    }
}

/// Each round binds the pending cloudlet whose best completion time is the globally largest,
/// still to the VM that achieves that best time.
pub fn max_min_allocate(scenario: &Scenario, tie_break: TieBreakMode) -> AssignmentPlan {
    run_fixed_rule(scenario, tie_break, GreedyRule::MaxMin)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::policies::min_min_allocate;
    use crate::rational::int;

    fn pairs(plan: &AssignmentPlan) -> Vec<(usize, usize)> {
        plan.bindings()
            .into_iter()
            .map(|(c, v)| (c.0, v.0))
            .collect()
    }

    #[test]
    fn table1_trace() {
        let s = Scenario::from_ints(&[10, 20], &[10, 20, 30, 90]).unwrap();
        let plan = max_min_allocate(&s, TieBreakMode::default());
        assert_eq!(pairs(&plan), vec![(3, 1), (2, 0), (1, 0), (0, 1)]);
        let predicted: Vec<_> = plan
            .steps
            .iter()
            .map(|s| s.predicted_completion.clone())
            .collect();
        assert_eq!(predicted.last(), Some(&int(5)));
        assert_eq!(predicted[2], int(5));
    }

    #[test]
    fn single_cloudlet_matches_min_min() {
        let s = Scenario::from_ints(&[10, 20, 15], &[33]).unwrap();
        for tb in [TieBreakMode::FirstInstantiated, TieBreakMode::MinExecution] {
            let max = max_min_allocate(&s, tb);
            let min = min_min_allocate(&s, tb);
            assert_eq!(max.bindings(), min.bindings());
            assert_eq!(
                max.steps[0].predicted_completion,
                min.steps[0].predicted_completion
            );
        }
    }

    #[test]
    fn identical_cloudlets_alternate_between_equal_vms() {
        let s = Scenario::from_ints(&[10, 10], &[30; 5]).unwrap();
        let plan = max_min_allocate(&s, TieBreakMode::FirstInstantiated);
        assert_eq!(pairs(&plan), vec![(0, 0), (1, 1), (2, 0), (3, 1), (4, 0)]);
    }
}
