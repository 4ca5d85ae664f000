//! Scenario description and the outputs of policies and executors.

use std::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::executor::ExecutionMode;
use crate::policies::StepDecision;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CloudletId(pub usize);

/// Index of a VM. Lower ids were instantiated earlier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VmId(pub usize);

impl fmt::Display for CloudletId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", self.0)
    }
}

impl fmt::Display for VmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VM{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cloudlet {
    pub id: CloudletId,
    /// Work units.
    pub file_size: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualMachine {
    pub id: VmId,
    /// Work units per second.
    pub mips: Rational,
}

/// Host metadata. Carried through but never consulted for timing.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Hosts {
    pub count: Option<u64>,
    pub ram_mb: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScenarioError {
    #[error("scenario must declare at least one VM")]
    NoVms,
    #[error("{vm}: mips must be positive, got {value}")]
    NonPositiveMips { vm: VmId, value: String },
    #[error("{cloudlet}: file_size must be positive, got {value}")]
    NonPositiveFileSize { cloudlet: CloudletId, value: String },
    #[error("hosts.{field} must be positive")]
    NonPositiveHostField { field: &'static str },
}

/// A static set of VMs and cloudlets. Ids are positions in declaration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    vms: Vec<VirtualMachine>,
    cloudlets: Vec<Cloudlet>,
    hosts: Option<Hosts>,
}

impl Scenario {
    pub fn new(mips: Vec<Rational>, file_sizes: Vec<Rational>) -> Result<Self, ScenarioError> {
        if mips.is_empty() {
            return Err(ScenarioError::NoVms);
        }
        let vms = mips
            .into_iter()
            .enumerate()
            .map(|(j, mips)| {
                if !mips.is_positive() {
                    return Err(ScenarioError::NonPositiveMips {
                        vm: VmId(j),
                        value: rational::format_decimal(&mips, 6),
                    });
                }
                Ok(VirtualMachine { id: VmId(j), mips })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let cloudlets = file_sizes
            .into_iter()
            .enumerate()
            .map(|(i, file_size)| {
                if !file_size.is_positive() {
                    return Err(ScenarioError::NonPositiveFileSize {
                        cloudlet: CloudletId(i),
                        value: rational::format_decimal(&file_size, 6),
                    });
                }
                Ok(Cloudlet {
                    id: CloudletId(i),
                    file_size,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            vms,
            cloudlets,
            hosts: None,
        })
    }

    /// Convenience constructor for integer rates and sizes.
    pub fn from_ints(mips: &[i64], file_sizes: &[i64]) -> Result<Self, ScenarioError> {
        Self::new(
            mips.iter().map(|&m| rational::int(m)).collect(),
            file_sizes.iter().map(|&s| rational::int(s)).collect(),
        )
    }

    pub fn with_hosts(mut self, hosts: Hosts) -> Result<Self, ScenarioError> {
        if hosts.count == Some(0) {
            return Err(ScenarioError::NonPositiveHostField { field: "count" });
        }
        if hosts.ram_mb == Some(0) {
            return Err(ScenarioError::NonPositiveHostField { field: "ram_mb" });
        }
        self.hosts = Some(hosts);
        Ok(self)
    }

    pub fn vms(&self) -> &[VirtualMachine] {
        &self.vms
    }

    pub fn cloudlets(&self) -> &[Cloudlet] {
        &self.cloudlets
    }

    pub fn hosts(&self) -> Option<&Hosts> {
        self.hosts.as_ref()
    }

    pub fn vm_count(&self) -> usize {
        self.vms.len()
    }

    pub fn cloudlet_count(&self) -> usize {
        self.cloudlets.len()
    }

    pub fn vm(&self, id: VmId) -> Option<&VirtualMachine> {
        self.vms.get(id.0)
    }

    pub fn cloudlet(&self, id: CloudletId) -> Option<&Cloudlet> {
        self.cloudlets.get(id.0)
    }

    /// Same VMs, every file size multiplied by `factor`.
    pub fn scale_file_sizes(&self, factor: &Rational) -> Result<Self, ScenarioError> {
        let scaled = Self::new(
            self.vms.iter().map(|vm| vm.mips.clone()).collect(),
            self.cloudlets
                .iter()
                .map(|c| &c.file_size * factor)
                .collect(),
        )?;
        Ok(Self {
            hosts: self.hosts.clone(),
            ..scaled
        })
    }

    pub fn total_work(&self) -> Rational {
        self.cloudlets
            .iter()
            .fold(Rational::zero(), |acc, c| acc + &c.file_size)
    }

    pub fn total_mips(&self) -> Rational {
        self.vms
            .iter()
            .fold(Rational::zero(), |acc, vm| acc + &vm.mips)
    }
}

/// Which rule produced a binding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecidedBy {
    Fcfs,
    MinMin,
    MaxMin,
    /// Produced by the exhaustive oracle rather than a heuristic.
    Optimal,
}

impl DecidedBy {
    pub fn as_str(self) -> &'static str {
        match self {
            DecidedBy::Fcfs => "FCFS",
            DecidedBy::MinMin => "MinMin",
            DecidedBy::MaxMin => "MaxMin",
            DecidedBy::Optimal => "Optimal",
        }
    }
}

impl fmt::Display for DecidedBy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AssignmentStep {
    pub cloudlet: CloudletId,
    pub vm: VmId,
    pub decided_by: DecidedBy,
    /// Completion time the policy expected when it made the binding.
    pub predicted_completion: Rational,
    /// Only Selective records why it chose Min-Min or Max-Min.
    pub decision: Option<StepDecision>,
}

/// Ordered cloudlet-to-VM bindings, one per allocation step.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct AssignmentPlan {
    pub steps: Vec<AssignmentStep>,
    /// Number of completion-time entries evaluated while building the plan.
    pub completion_evaluations: u64,
}

impl AssignmentPlan {
    pub fn bindings(&self) -> Vec<(CloudletId, VmId)> {
        self.steps.iter().map(|s| (s.cloudlet, s.vm)).collect()
    }

    pub fn vm_of(&self, cloudlet: CloudletId) -> Option<VmId> {
        self.steps
            .iter()
            .find(|s| s.cloudlet == cloudlet)
            .map(|s| s.vm)
    }

    pub fn decisions(&self) -> impl Iterator<Item = &StepDecision> {
        self.steps.iter().filter_map(|s| s.decision.as_ref())
    }

    /// True when each cloudlet of `scenario` is bound exactly once to an existing VM.
    pub fn covers(&self, scenario: &Scenario) -> bool {
        let mut seen = vec![false; scenario.cloudlet_count()];
        for step in &self.steps {
            if step.vm.0 >= scenario.vm_count() {
                return false;
            }
            match seen.get_mut(step.cloudlet.0) {
                Some(flag) if !*flag => *flag = true,
                _ => return false,
            }
        }
        seen.into_iter().all(|s| s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScheduleEntry {
    pub cloudlet: CloudletId,
    pub vm: VmId,
    pub start: Rational,
    pub finish: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schedule {
    /// In plan order.
    pub entries: Vec<ScheduleEntry>,
    pub mode: ExecutionMode,
    pub makespan: Rational,
}

impl Schedule {
    pub fn entries_on(&self, vm: VmId) -> impl Iterator<Item = &ScheduleEntry> {
        self.entries.iter().filter(move |e| e.vm == vm)
    }

    pub fn entry(&self, cloudlet: CloudletId) -> Option<&ScheduleEntry> {
        self.entries.iter().find(|e| e.cloudlet == cloudlet)
    }
}

/// Spread of the best completion times of the not-yet-allocated cloudlets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapAnalysis {
    /// Ascending.
    pub sorted_best_comps: Vec<Rational>,
    pub mean: Rational,
    /// Population variance. Kept exact; the standard deviation is its square root.
    pub variance: Rational,
    /// 1-based index `l` of the first element followed by a jump larger than the standard
    /// deviation.
    pub gap_location: Option<usize>,
}

impl GapAnalysis {
    pub fn sd(&self) -> f64 {
        rational::to_f64(&self.variance).sqrt()
    }

    /// `diff > sd`, decided exactly by comparing squares. `diff` must be non-negative.
    pub fn exceeds_sd(&self, diff: &Rational) -> bool {
        !diff.is_negative() && diff * diff > self.variance
    }

    /// `sd < mean`, decided exactly.
    pub fn sd_below_mean(&self) -> bool {
        self.mean.is_positive() && self.variance < &self.mean * &self.mean
    }
}
