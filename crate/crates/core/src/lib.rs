//! Provisioning of independent cloudlets onto heterogeneous virtual machines.
//!
//! The crate is split the same way a run is:
//!
//! 1. [`model`] describes a static [`Scenario`](model::Scenario) of VMs and cloudlets.
//! 2. [`policies`] turns a scenario into an [`AssignmentPlan`](model::AssignmentPlan). The
//!    built-in policies are FCFS (round-robin), Min-Min, Max-Min and Selective, which picks
//!    Min-Min or Max-Min at every step from the spread of the candidates' best completion
//!    times. Policies are trait objects looked up by name in a
//!    [`PolicyRegistry`](policies::PolicyRegistry).
//! 3. [`executor`] plays a plan out under space-shared (serial) or time-shared (processor
//!    sharing) semantics and yields a [`Schedule`](model::Schedule) with its makespan.
//! 4. [`oracle`] enumerates every assignment of a small instance to find the optimal makespan.
//!
//! All times, sizes and rates are exact rationals ([`Rational`]); floating point only shows
//! up where values are reported.
//!
//! ```
//! use cloudlet_core::model::Scenario;
//! use cloudlet_core::policies::{PolicyRegistry, TieBreakMode};
//! use cloudlet_core::executor::ExecutionMode;
//! use cloudlet_core::rational::int;
//!
//! let scenario = Scenario::from_ints(&[10, 20], &[10, 20, 30, 90]).unwrap();
//! let registry = PolicyRegistry::builtin();
//! let plan = registry.get("maxmin").unwrap().allocate(&scenario, TieBreakMode::default());
//! let schedule = ExecutionMode::SpaceShared.executor().run(&scenario, &plan).unwrap();
//! assert_eq!(schedule.makespan, int(5));
//! ```

pub mod executor;
pub mod metrics;
pub mod model;
pub mod oracle;
pub mod policies;
pub mod rational;

pub use rational::Rational;
