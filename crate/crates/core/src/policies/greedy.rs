use std::cmp::Ordering;

use crate::metrics::{completion_row, execution_matrix, ExecutionMatrix, VmReadyTimes};
use crate::model::{AssignmentPlan, AssignmentStep, CloudletId, DecidedBy, Scenario, VmId};
use crate::rational::Rational;

use super::{StepDecision, TieBreakMode};

/// Which end of the best-completion-time list a greedy round commits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GreedyRule {
    MinMin,
    MaxMin,
}

impl GreedyRule {
    pub fn decided_by(self) -> DecidedBy {
        match self {
            GreedyRule::MinMin => DecidedBy::MinMin,
            GreedyRule::MaxMin => DecidedBy::MaxMin,
        }
    }
}

/// A pending cloudlet paired with the VM that would finish it first.
#[derive(Debug, Clone)]
pub(crate) struct Candidate {
    pub cloudlet: CloudletId,
    pub vm: VmId,
    pub completion: Rational,
}

/// Meta-task list plus VM ready times, mutated one binding at a time.
pub(crate) struct GreedyState {
    exe: ExecutionMatrix,
    ready: VmReadyTimes,
    pending: Vec<CloudletId>,
    tie_break: TieBreakMode,
    plan: AssignmentPlan,
}

impl GreedyState {
    pub fn new(scenario: &Scenario, tie_break: TieBreakMode) -> Self {
        Self {
            exe: execution_matrix(scenario),
            ready: VmReadyTimes::idle(scenario.vm_count()),
            pending: scenario.cloudlets().iter().map(|c| c.id).collect(),
            tie_break,
            plan: AssignmentPlan::default(),
        }
    }

    /// Orders the pending list by shortest execution time, ascending. Stable, so equal
    /// cloudlets keep id order.
    pub fn sort_pending_by_min_execution(&mut self) {
        let exe = &self.exe;
        self.pending
            .sort_by(|a, b| exe.min_execution(*a).cmp(exe.min_execution(*b)));
    }

    pub fn is_done(&self) -> bool {
        self.pending.is_empty()
    }

    pub fn remaining(&self) -> usize {
        self.pending.len()
    }

    /// Best VM for every pending cloudlet, in pending order.
    pub fn candidates(&mut self) -> Vec<Candidate> {
        let v = self.exe.vm_count() as u64;
        self.plan.completion_evaluations += v * self.pending.len() as u64;
        self.pending
            .iter()
            .map(|&cloudlet| {
                let row = completion_row(&self.exe, &self.ready, cloudlet);
                let (vm, completion) = self.best_vm(cloudlet, row);
                Candidate {
                    cloudlet,
                    vm,
                    completion,
                }
            })
            .collect()
    }

    fn best_vm(&self, cloudlet: CloudletId, row: Vec<Rational>) -> (VmId, Rational) {
        let exe = self.exe.row(cloudlet);
        let mut best: Option<(usize, Rational)> = None;
        for (j, comp) in row.into_iter().enumerate() {
            let better = match &best {
                None => true,
                Some((bj, bc)) => match comp.cmp(bc) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => match self.tie_break {
                        TieBreakMode::FirstInstantiated => false,
                        TieBreakMode::MinExecution => exe[j] < exe[*bj],
                    },
                },
            };
            if better {
                best = Some((j, comp));
            }
        }
        let (j, comp) = best.expect("scenarios always have at least one VM");
        (VmId(j), comp)
    }

    /// Commits one binding and drops the cloudlet from the pending list.
    pub fn commit(
        &mut self,
        candidate: Candidate,
        decided_by: DecidedBy,
        decision: Option<StepDecision>,
    ) {
        let duration = self.exe.get(candidate.cloudlet, candidate.vm).clone();
        self.ready.push_work(candidate.vm, &duration);
        debug_assert_eq!(self.ready.get(candidate.vm), &candidate.completion);
        self.pending.retain(|&c| c != candidate.cloudlet);
        self.plan.steps.push(AssignmentStep {
            cloudlet: candidate.cloudlet,
            vm: candidate.vm,
            decided_by,
            predicted_completion: candidate.completion,
            decision,
        });
    }

    pub fn finish(self) -> AssignmentPlan {
        self.plan
    }
}

/// Picks the candidate with the smallest (Min-Min) or largest (Max-Min) best completion time.
/// Ties go to the lower cloudlet id.
pub(crate) fn pick(candidates: Vec<Candidate>, rule: GreedyRule) -> Candidate {
    candidates
        .into_iter()
        .reduce(|best, next| {
            let order = match rule {
                GreedyRule::MinMin => next.completion.cmp(&best.completion),
                GreedyRule::MaxMin => best.completion.cmp(&next.completion),
            };
            match order {
                Ordering::Less => next,
                Ordering::Equal if next.cloudlet < best.cloudlet => next,
                _ => best,
            }
        })
        .expect("pick called with no pending cloudlets")
}

/// Runs `rule` every round until the meta-task list is empty.
pub(crate) fn run_fixed_rule(
    scenario: &Scenario,
    tie_break: TieBreakMode,
    rule: GreedyRule,
) -> AssignmentPlan {
    let mut state = GreedyState::new(scenario, tie_break);
    while !state.is_done() {
        let chosen = pick(state.candidates(), rule);
        state.commit(chosen, rule.decided_by(), None);
    }
    state.finish()
}
