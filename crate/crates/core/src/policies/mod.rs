//! Allocation policies.
//!
//! Every policy implements [`AllocationPolicy`] and is looked up by name through a
//! [`PolicyRegistry`]. The greedy policies share one engine ([`greedy`]): each round computes
//! the completion time of every pending cloudlet on every VM, takes each cloudlet's best VM,
//! and then commits either the cloudlet with the smallest best completion (Min-Min) or the
//! largest (Max-Min). Selective makes that choice afresh each round via [`classify_step`].

use std::fmt;

use thiserror::Error;

use crate::model::{AssignmentPlan, GapAnalysis, Scenario};

mod fcfs;
mod greedy;
mod max_min;
mod min_min;
mod selective;

pub use fcfs::{fcfs_allocate, Fcfs};
pub use greedy::GreedyRule;
pub use max_min::{max_min_allocate, MaxMin};
pub use min_min::{min_min_allocate, MinMin};
pub use selective::{replay_allocate, selective_allocate, Selective};

/// How to choose among VMs that tie on completion time.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum TieBreakMode {
    /// The earliest instantiated VM (lowest id).
    #[default]
    FirstInstantiated,
    /// The VM with the shortest execution time for the cloudlet, then the lowest id.
    MinExecution,
}

impl TieBreakMode {
    pub fn as_str(self) -> &'static str {
        match self {
            TieBreakMode::FirstInstantiated => "first",
            TieBreakMode::MinExecution => "min-exec",
        }
    }
}

impl fmt::Display for TieBreakMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepCase {
    /// A large jump sits in the first half of the sorted list.
    Case1MinMin,
    /// A large jump sits in the second half.
    Case2MaxMin,
    /// No large jump, and the standard deviation is below the mean.
    Case3MinMin,
    /// No large jump, and the standard deviation is at least the mean.
    Case3MaxMin,
}

impl StepCase {
    pub fn rule(self) -> GreedyRule {
        match self {
            StepCase::Case1MinMin | StepCase::Case3MinMin => GreedyRule::MinMin,
            StepCase::Case2MaxMin | StepCase::Case3MaxMin => GreedyRule::MaxMin,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            StepCase::Case1MinMin => "Case1MinMin",
            StepCase::Case2MaxMin => "Case2MaxMin",
            StepCase::Case3MinMin => "Case3MinMin",
            StepCase::Case3MaxMin => "Case3MaxMin",
        }
    }
}

/// Why Selective picked Min-Min or Max-Min for one round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepDecision {
    pub case_taken: StepCase,
    pub gap: GapAnalysis,
    pub c_remaining: usize,
}

/// Maps the spread of the pending cloudlets' best completion times to a rule.
///
/// With a jump at `l`: `l < c/2` selects Min-Min, otherwise Max-Min. Without one the
/// standard deviation is compared to the mean.
pub fn classify_step(gap: &GapAnalysis, c_remaining: usize) -> StepDecision {
    let case_taken = match gap.gap_location {
        Some(l) if 2 * l < c_remaining => StepCase::Case1MinMin,
        Some(_) => StepCase::Case2MaxMin,
        None if gap.sd_below_mean() => StepCase::Case3MinMin,
        None => StepCase::Case3MaxMin,
    };
    StepDecision {
        case_taken,
        gap: gap.clone(),
        c_remaining,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolicyError {
    #[error("unknown policy `{0}`")]
    UnknownPolicy(String),
    #[error("replay script has {got} steps but the scenario has {expected} cloudlets")]
    ScriptLength { expected: usize, got: usize },
}

/// A deterministic cloudlet-to-VM allocation strategy.
pub trait AllocationPolicy: Send + Sync {
    /// Registry key, also used on the command line.
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn allocate(&self, scenario: &Scenario, tie_break: TieBreakMode) -> AssignmentPlan;
}

/// Policies in registration order.
#[derive(Default)]
pub struct PolicyRegistry {
    policies: Vec<Box<dyn AllocationPolicy>>,
}

impl PolicyRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// `fcfs`, `minmin`, `maxmin`, `selective`, in that order.
    pub fn builtin() -> Self {
        let mut registry = Self::new();
        registry.register(Box::new(Fcfs));
        registry.register(Box::new(MinMin));
        registry.register(Box::new(MaxMin));
        registry.register(Box::new(Selective));
        registry
    }

    /// Adds `policy`, replacing any earlier policy with the same name in place.
    pub fn register(&mut self, policy: Box<dyn AllocationPolicy>) {
        match self.policies.iter_mut().find(|p| p.name() == policy.name()) {
            Some(slot) => *slot = policy,
            None => self.policies.push(policy),
        }
    }

    pub fn get(&self, name: &str) -> Option<&dyn AllocationPolicy> {
        self.policies
            .iter()
            .find(|p| p.name() == name)
            .map(|p| p.as_ref())
    }

    pub fn require(&self, name: &str) -> Result<&dyn AllocationPolicy, PolicyError> {
        self.get(name)
            .ok_or_else(|| PolicyError::UnknownPolicy(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.policies.iter().map(|p| p.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn AllocationPolicy> {
        self.policies.iter().map(|p| p.as_ref())
    }
}
