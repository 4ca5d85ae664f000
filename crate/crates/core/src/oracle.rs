//! Exhaustive makespan optimizer for small instances.
//!
//! Space-shared makespan depends only on which VM each cloudlet lands on, not on order, so
//! the search space is the `v^c` assignment vectors. They are visited depth first with
//! cloudlet 0 as the most significant position, which is lexicographic order; only strictly
//! better vectors replace the incumbent, so the lexicographically smallest optimum wins.

use num_traits::Zero;
use thiserror::Error;

use crate::metrics::{execution_matrix, ExecutionMatrix};
use crate::model::{AssignmentPlan, AssignmentStep, CloudletId, DecidedBy, Scenario, VmId};
use crate::rational::Rational;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{vms}^{cloudlets} assignments exceed the enumeration budget of {budget}")]
    BudgetExceeded {
        vms: usize,
        cloudlets: usize,
        budget: u64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimalAssignment {
    /// Bindings in cloudlet id order.
    pub plan: AssignmentPlan,
    pub makespan: Rational,
    pub assignments_examined: u64,
}

/// Number of assignment vectors, or `None` when it overflows `u64`.
pub fn search_space(scenario: &Scenario) -> Option<u64> {
    let cloudlets = u32::try_from(scenario.cloudlet_count()).ok()?;
    (scenario.vm_count() as u64).checked_pow(cloudlets)
}

pub fn optimal_assignment(scenario: &Scenario) -> Result<OptimalAssignment, OracleError> {
    optimal_assignment_with_budget(scenario, DEFAULT_BUDGET)
}

pub fn optimal_assignment_with_budget(
    scenario: &Scenario,
    budget: u64,
) -> Result<OptimalAssignment, OracleError> {
    match search_space(scenario) {
        Some(n) if n <= budget => {}
        _ => {
            return Err(OracleError::BudgetExceeded {
                vms: scenario.vm_count(),
                cloudlets: scenario.cloudlet_count(),
                budget,
            })
        }
    }

    let mut search = Search {
        exe: execution_matrix(scenario),
        loads: vec![Rational::zero(); scenario.vm_count()],
        current: Vec::with_capacity(scenario.cloudlet_count()),
        best: None,
        examined: 0,
    };
    search.descend();
    let (assignment, makespan) = search.best.expect("at least one assignment always exists");

    let mut clock = vec![Rational::zero(); scenario.vm_count()];
    let steps = assignment
        .iter()
        .enumerate()
        .map(|(i, &j)| {
            clock[j] += search.exe.get(CloudletId(i), VmId(j));
            AssignmentStep {
                cloudlet: CloudletId(i),
                vm: VmId(j),
                decided_by: DecidedBy::Optimal,
                predicted_completion: clock[j].clone(),
                decision: None,
            }
        })
        .collect();
    Ok(OptimalAssignment {
        plan: AssignmentPlan {
            steps,
            completion_evaluations: 0,
        },
        makespan,
        assignments_examined: search.examined,
    })
}

struct Search {
    exe: ExecutionMatrix,
    loads: Vec<Rational>,
    current: Vec<usize>,
    best: Option<(Vec<usize>, Rational)>,
    examined: u64,
}

impl Search {
    fn descend(&mut self) {
        let i = self.current.len();
        if i == self.exe.cloudlet_count() {
            self.examined += 1;
            let span = self
                .loads
                .iter()
                .max()
                .cloned()
                .unwrap_or_else(Rational::zero);
            if self.best.as_ref().is_none_or(|(_, b)| span < *b) {
                self.best = Some((self.current.clone(), span));
            }
            return;
        }
        for j in 0..self.exe.vm_count() {
            let exe = self.exe.get(CloudletId(i), VmId(j)).clone();
            self.loads[j] += &exe;
            self.current.push(j);
            self.descend();
            self.current.pop();
            self.loads[j] -= &exe;
        }
    }
}
