//! Cross-module properties of policies, executors and the oracle.

use cloudlet_core::executor::{run_space_shared, run_time_shared};
use cloudlet_core::metrics::execution_matrix;
use cloudlet_core::model::{CloudletId, Scenario};
use cloudlet_core::oracle::optimal_assignment;
use cloudlet_core::policies::{min_min_allocate, PolicyRegistry, TieBreakMode};
use cloudlet_core::rational::{int, ratio, Rational};
use proptest::prelude::*;

fn scenario() -> impl Strategy<Value = Scenario> {
    (
        prop::collection::vec(1i64..=100, 1..=3),
        prop::collection::vec(1i64..=100, 0..=6),
    )
        .prop_map(|(mips, sizes)| Scenario::from_ints(&mips, &sizes).unwrap())
}

fn tie_break() -> impl Strategy<Value = TieBreakMode> {
    prop_oneof![
        Just(TieBreakMode::FirstInstantiated),
        Just(TieBreakMode::MinExecution)
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn every_policy_binds_each_cloudlet_once(s in scenario(), tb in tie_break()) {
        for policy in PolicyRegistry::builtin().iter() {
            prop_assert!(policy.allocate(&s, tb).covers(&s), "{}", policy.name());
        }
    }

    #[test]
    fn policies_are_deterministic(s in scenario(), tb in tie_break()) {
        for policy in PolicyRegistry::builtin().iter() {
            prop_assert_eq!(policy.allocate(&s, tb), policy.allocate(&s, tb));
        }
    }

    #[test]
    fn no_policy_beats_the_oracle(s in scenario(), tb in tie_break()) {
        let opt = optimal_assignment(&s).unwrap();
        prop_assert_eq!(&run_space_shared(&s, &opt.plan).unwrap().makespan, &opt.makespan);
        for policy in PolicyRegistry::builtin().iter() {
            let span = run_space_shared(&s, &policy.allocate(&s, tb)).unwrap().makespan;
            prop_assert!(span >= opt.makespan, "{} undercut the optimum", policy.name());
        }
    }

    #[test]
    fn oracle_respects_lower_bounds(s in scenario()) {
        let opt = optimal_assignment(&s).unwrap();
        prop_assert!(opt.makespan >= s.total_work() / s.total_mips());
        let exe = execution_matrix(&s);
        for i in 0..s.cloudlet_count() {
            prop_assert!(&opt.makespan >= exe.min_execution(CloudletId(i)));
        }
    }

    #[test]
    fn scaling_sizes_scales_makespan_only(s in scenario(), tb in tie_break(), k in prop_oneof![
        Just(ratio(2, 1)), Just(ratio(10, 1)), Just(ratio(1, 3)), Just(ratio(7, 5))
    ]) {
        let scaled = s.scale_file_sizes(&k).unwrap();
        for policy in PolicyRegistry::builtin().iter() {
            let a = policy.allocate(&s, tb);
            let b = policy.allocate(&scaled, tb);
            prop_assert_eq!(a.bindings(), b.bindings(), "{}", policy.name());
            let span_a = run_space_shared(&s, &a).unwrap().makespan;
            let span_b = run_space_shared(&scaled, &b).unwrap().makespan;
            prop_assert_eq!(span_b, span_a * &k);
        }
    }

    #[test]
    fn single_vm_collapses_every_policy(
        sizes in prop::collection::vec(1i64..=100, 0..=7),
        mips in 1i64..=100,
    ) {
        let s = Scenario::from_ints(&[mips], &sizes).unwrap();
        let expected = s.total_work() / int(mips);
        for policy in PolicyRegistry::builtin().iter() {
            let plan = policy.allocate(&s, TieBreakMode::default());
            prop_assert_eq!(&run_space_shared(&s, &plan).unwrap().makespan, &expected);
            prop_assert_eq!(&run_time_shared(&s, &plan).unwrap().makespan, &expected);
        }
    }
}

#[test]
fn doubling_cloudlets_roughly_quadruples_work() {
    let count = |c: usize| {
        let sizes: Vec<i64> = (1..=c as i64).map(|i| i * 7 % 31 + 1).collect();
        let s = Scenario::from_ints(&[10, 20, 30], &sizes).unwrap();
        min_min_allocate(&s, TieBreakMode::default()).completion_evaluations as f64
    };
    for c in [20, 40, 80] {
        let ratio = count(2 * c) / count(c);
        assert!((3.5..=4.2).contains(&ratio), "c={c}: ratio {ratio}");
    }
}

#[test]
fn predicted_completions_match_space_shared_finishes() {
    let s = Scenario::from_ints(&[10, 20], &[12, 16, 50, 30, 20, 40]).unwrap();
    for policy in PolicyRegistry::builtin().iter() {
        let plan = policy.allocate(&s, TieBreakMode::default());
        let schedule = run_space_shared(&s, &plan).unwrap();
        for step in &plan.steps {
            let finish: &Rational = &schedule.entry(step.cloudlet).unwrap().finish;
            assert_eq!(finish, &step.predicted_completion, "{}", policy.name());
        }
    }
}
