use crate::metrics::gap_analysis;
use crate::model::{AssignmentPlan, Scenario};
use crate::rational::Rational;

use super::greedy::{pick, GreedyRule, GreedyState};
use super::{classify_step, AllocationPolicy, PolicyError, TieBreakMode};

#[derive(Debug, Clone, Copy, Default)]
pub struct Selective;

impl AllocationPolicy for Selective {
    fn name(&self) -> &'static str {
        "selective"
    }

    fn description(&self) -> &'static str {
        "per-step choice between Min-Min and Max-Min from the spread of best completion times"
    }

    fn allocate(&self, scenario: &Scenario, tie_break: TieBreakMode) -> AssignmentPlan {
        selective_allocate(scenario, tie_break)
    }
}

/// Chooses Min-Min or Max-Min afresh for every single binding.
///
/// Each round recomputes the pending cloudlets' best completion times, runs
/// [`gap_analysis`] over them and lets [`classify_step`] pick the rule; exactly one
/// cloudlet is then committed under that rule. Every step carries its
/// [`StepDecision`](super::StepDecision).
pub fn selective_allocate(scenario: &Scenario, tie_break: TieBreakMode) -> AssignmentPlan {
    let mut state = GreedyState::new(scenario, tie_break);
    state.sort_pending_by_min_execution();
    while !state.is_done() {
        let candidates = state.candidates();
        let best: Vec<Rational> = candidates.iter().map(|c| c.completion.clone()).collect();
        let decision = classify_step(&gap_analysis(&best), state.remaining());
        let rule = decision.case_taken.rule();
        state.commit(pick(candidates, rule), rule.decided_by(), Some(decision));
    }
    state.finish()
}

/// Re-runs the greedy loop with a fixed rule per step instead of the gap heuristic.
pub fn replay_allocate(
    scenario: &Scenario,
    tie_break: TieBreakMode,
    script: &[GreedyRule],
) -> Result<AssignmentPlan, PolicyError> {
    if script.len() != scenario.cloudlet_count() {
        return Err(PolicyError::ScriptLength {
            expected: scenario.cloudlet_count(),
            got: script.len(),
        });
    }
    let mut state = GreedyState::new(scenario, tie_break);
    state.sort_pending_by_min_execution();
    for &rule in script {
        let chosen = pick(state.candidates(), rule);
        state.commit(chosen, rule.decided_by(), None);
    }
    Ok(state.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::DecidedBy;
    use crate::policies::{min_min_allocate, StepCase};
    use crate::rational::ratio;
    use proptest::prelude::*;

    fn table1() -> Scenario {
        Scenario::from_ints(&[10, 20], &[10, 20, 30, 90]).unwrap()
    }

    #[test]
    fn table1_trace() {
        let plan = selective_allocate(&table1(), TieBreakMode::FirstInstantiated);
        let trace: Vec<_> = plan
            .steps
            .iter()
            .map(|s| (s.decided_by, s.cloudlet.0, s.vm.0))
            .collect();
        assert_eq!(
            trace,
            vec![
                (DecidedBy::MaxMin, 3, 1),
                (DecidedBy::MinMin, 0, 0),
                (DecidedBy::MaxMin, 2, 0),
                (DecidedBy::MinMin, 1, 1),
            ]
        );
        let cases: Vec<_> = plan.decisions().map(|d| d.case_taken).collect();
        assert_eq!(
            cases,
            vec![
                StepCase::Case2MaxMin,
                StepCase::Case1MinMin,
                StepCase::Case2MaxMin,
                StepCase::Case3MinMin,
            ]
        );
        let first = plan.decisions().next().unwrap();
        assert_eq!(first.gap.gap_location, Some(3));
        assert_eq!(first.gap.mean, ratio(15, 8));
        let last = plan.steps.last().unwrap();
        assert_eq!(last.predicted_completion, ratio(11, 2));
    }

    #[test]
    fn single_cloudlet_is_case3_min_min_on_fastest_vm() {
        let s = Scenario::from_ints(&[10, 40, 20], &[8]).unwrap();
        let plan = selective_allocate(&s, TieBreakMode::default());
        assert_eq!(plan.steps.len(), 1);
        assert_eq!(plan.steps[0].vm.0, 1);
        assert_eq!(
            plan.steps[0].decision.as_ref().unwrap().case_taken,
            StepCase::Case3MinMin
        );
    }

    #[test]
    fn empty_scenario_yields_empty_plan() {
        let s = Scenario::from_ints(&[10], &[]).unwrap();
        assert!(selective_allocate(&s, TieBreakMode::default())
            .steps
            .is_empty());
    }

    #[test]
    fn replay_rejects_wrong_script_length() {
        let err = replay_allocate(&table1(), TieBreakMode::default(), &[GreedyRule::MinMin]);
        assert_eq!(
            err,
            Err(PolicyError::ScriptLength {
                expected: 4,
                got: 1
            })
        );
    }

    #[test]
    fn uniform_instances_match_min_min() {
        for c in 1..7 {
            for v in 1..4 {
                let s = Scenario::from_ints(&vec![5; v], &vec![9; c]).unwrap();
                let sel = selective_allocate(&s, TieBreakMode::default());
                assert!(sel
                    .decisions()
                    .all(|d| d.case_taken == StepCase::Case3MinMin));
                assert_eq!(
                    sel.bindings(),
                    min_min_allocate(&s, TieBreakMode::default()).bindings()
                );
            }
        }
    }

    proptest! {
        #[test]
        fn replaying_recorded_rules_reproduces_plan(
            sizes in prop::collection::vec(1i64..100, 0..8),
            mips in prop::collection::vec(1i64..100, 1..4),
            min_exec in any::<bool>(),
        ) {
            let tb = if min_exec { TieBreakMode::MinExecution } else { TieBreakMode::FirstInstantiated };
            let s = Scenario::from_ints(&mips, &sizes).unwrap();
            let plan = selective_allocate(&s, tb);
            let script: Vec<_> = plan.decisions().map(|d| d.case_taken.rule()).collect();
            let replayed = replay_allocate(&s, tb, &script).unwrap();
            prop_assert_eq!(plan.bindings(), replayed.bindings());
            let a: Vec<_> = plan.steps.iter().map(|s| s.predicted_completion.clone()).collect();
            let b: Vec<_> = replayed.steps.iter().map(|s| s.predicted_completion.clone()).collect();
            prop_assert_eq!(a, b);
        }
    }
}
