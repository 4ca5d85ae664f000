//! Execution and completion times, dispersion statistics and makespan.

use num_traits::Zero;

use crate::model::{CloudletId, GapAnalysis, Scenario, Schedule, VmId};
use crate::rational::{int, Rational};

/// `values[i][j]` is the execution time of cloudlet `i` on VM `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExecutionMatrix {
    values: Vec<Vec<Rational>>,
    vm_count: usize,
}

impl ExecutionMatrix {
    pub fn get(&self, cloudlet: CloudletId, vm: VmId) -> &Rational {
        &self.values[cloudlet.0][vm.0]
    }

    pub fn row(&self, cloudlet: CloudletId) -> &[Rational] {
        &self.values[cloudlet.0]
    }

    pub fn cloudlet_count(&self) -> usize {
        self.values.len()
    }

    pub fn vm_count(&self) -> usize {
        self.vm_count
    }

    /// Shortest execution time of `cloudlet` over all VMs.
    pub fn min_execution(&self, cloudlet: CloudletId) -> &Rational {
        self.row(cloudlet)
            .iter()
            .min()
            .expect("scenarios always have at least one VM")
    }
}

/// Time at which each VM finishes the work bound to it so far.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VmReadyTimes {
    ready: Vec<Rational>,
}

impl VmReadyTimes {
    pub fn idle(vm_count: usize) -> Self {
        Self {
            ready: vec![Rational::zero(); vm_count],
        }
    }

    pub fn from_values(ready: Vec<Rational>) -> Self {
        Self { ready }
    }

    pub fn get(&self, vm: VmId) -> &Rational {
        &self.ready[vm.0]
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.ready
    }

    /// Appends `duration` of work to `vm`.
    pub fn push_work(&mut self, vm: VmId, duration: &Rational) {
        self.ready[vm.0] += duration;
    }
}

pub fn execution_matrix(scenario: &Scenario) -> ExecutionMatrix {
    let values = scenario
        .cloudlets()
        .iter()
        .map(|c| {
            scenario
                .vms()
                .iter()
                .map(|vm| &c.file_size / &vm.mips)
                .collect()
        })
        .collect();
    ExecutionMatrix {
        values,
        vm_count: scenario.vm_count(),
    }
}

/// Completion time of `cloudlet` on every VM given the current ready times.
pub fn completion_row(
    exe: &ExecutionMatrix,
    ready: &VmReadyTimes,
    cloudlet: CloudletId,
) -> Vec<Rational> {
    exe.row(cloudlet)
        .iter()
        .zip(ready.as_slice())
        .map(|(e, r)| e + r)
        .collect()
}

/// Mean, population variance and first large jump of the best completion times.
///
/// Panics on an empty input: there is nothing to choose between.
pub fn gap_analysis(best_comps: &[Rational]) -> GapAnalysis {
    assert!(
        !best_comps.is_empty(),
        "gap analysis over an empty meta-task list"
    );
    let mut sorted = best_comps.to_vec();
    sorted.sort();
    let count = int(sorted.len() as i64);
    let mean = sorted.iter().fold(Rational::zero(), |acc, x| acc + x) / &count;
    let variance = sorted
        .iter()
        .map(|x| {
            let d = x - &mean;
            &d * &d
        })
        .fold(Rational::zero(), |acc, x| acc + x)
        / &count;

    let mut analysis = GapAnalysis {
        sorted_best_comps: Vec::new(),
        mean,
        variance,
        gap_location: None,
    };
    analysis.gap_location = sorted
        .windows(2)
        .position(|pair| analysis.exceeds_sd(&(&pair[1] - &pair[0])))
        .map(|k| k + 1);
    analysis.sorted_best_comps = sorted;
    analysis
}

/// Latest finish over all entries; zero for an empty schedule.
pub fn makespan(schedule: &Schedule) -> Rational {
    schedule
        .entries
        .iter()
        .map(|e| &e.finish)
        .max()
        .cloned()
        .unwrap_or_else(Rational::zero)
}
