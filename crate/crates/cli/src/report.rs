//! Flattened run results for printing and serialization.
//!
//! Numbers are rounded to six fractional digits here, once, so every output format shows the
//! same values.

use cloudlet_core::model::{AssignmentPlan, Scenario, Schedule};
use cloudlet_core::policies::TieBreakMode;
use cloudlet_core::rational::{self, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub const DECIMALS: u32 = 6;

/// Rounds to [`DECIMALS`] fractional digits.
pub fn report_number(value: &Rational) -> f64 {
    rational::format_decimal(value, DECIMALS)
        .parse()
        .expect("formatted decimals parse as f64")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VmUsage {
    pub vm_id: usize,
    pub busy_time: f64,
    /// busy_time / makespan, 0 when the makespan is 0.
    pub utilization: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CloudletTiming {
    pub cloudlet_id: usize,
    pub vm_id: usize,
    pub start: f64,
    pub finish: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecisionRow {
    pub step: usize,
    pub cloudlet_id: usize,
    pub vm_id: usize,
    pub case: String,
    pub c_remaining: usize,
    pub mean: f64,
    pub sd: f64,
    pub gap_location: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub policy: String,
    pub mode: String,
    pub tie_break: String,
    pub makespan: f64,
    pub vms: Vec<VmUsage>,
    pub cloudlets: Vec<CloudletTiming>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub decisions: Vec<DecisionRow>,
}

impl RunReport {
    pub fn new(
        policy: &str,
        tie_break: TieBreakMode,
        scenario: &Scenario,
        plan: &AssignmentPlan,
        schedule: &Schedule,
    ) -> Self {
        // busy time is the execution time of the bound work in either mode
        let mut busy = vec![Rational::zero(); scenario.vm_count()];
        for step in &plan.steps {
            let size = &scenario.cloudlets()[step.cloudlet.0].file_size;
            busy[step.vm.0] += size / &scenario.vms()[step.vm.0].mips;
        }
        let vms = busy
            .iter()
            .enumerate()
            .map(|(j, b)| VmUsage {
                vm_id: j,
                busy_time: report_number(b),
                utilization: if schedule.makespan.is_zero() {
                    0.0
                } else {
                    report_number(&(b / &schedule.makespan))
                },
            })
            .collect();
        let cloudlets = schedule
            .entries
            .iter()
            .map(|e| CloudletTiming {
                cloudlet_id: e.cloudlet.0,
                vm_id: e.vm.0,
                start: report_number(&e.start),
                finish: report_number(&e.finish),
            })
            .collect();
        let decisions = plan
            .steps
            .iter()
            .enumerate()
            .filter_map(|(k, step)| {
                let d = step.decision.as_ref()?;
                Some(DecisionRow {
                    step: k + 1,
                    cloudlet_id: step.cloudlet.0,
                    vm_id: step.vm.0,
                    case: d.case_taken.as_str().to_string(),
                    c_remaining: d.c_remaining,
                    mean: report_number(&d.gap.mean),
                    sd: (d.gap.sd() * 1e6).round() / 1e6,
                    gap_location: d.gap.gap_location,
                })
            })
            .collect();
        Self {
            policy: policy.to_string(),
            mode: schedule.mode.as_str().to_string(),
            tie_break: tie_break.as_str().to_string(),
            makespan: report_number(&schedule.makespan),
            vms,
            cloudlets,
            decisions,
        }
    }
}
