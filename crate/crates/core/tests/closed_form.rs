//! The closed-form solver checked against a direct 1-D scan of the reduced
//! constraints and against its own algebraic invariants.

use proptest::prelude::*;
use springnet::solver::{min_cost, roots, solve_reduced, ActiveConstraint};
use springnet::{Topology, Weights};

/// Smallest grid `x` in `[0, x_max]` passing `a x + k b / x >= 1` and
/// `x >= 1`, found by walking the grid. Returns `None` if none qualifies.
fn scan_reduced(a: f64, b: f64, k: f64, step: f64, x_max: f64) -> Option<f64> {
    let n = (x_max / step).round() as usize;
    (0..=n).map(|i| i as f64 * step).find(|&x| {
        let resistance_term = if b == 0.0 { 0.0 } else { k * b / x };
        a * x + resistance_term >= 1.0 && x >= 1.0
    })
}

fn w(a: f64, b: f64) -> Weights {
    Weights::new(a, b).unwrap()
}

#[test]
fn scan_confirms_the_frozen_goldens() {
    // goldens frozen from this scan at step 1e-6
    let parallel = scan_reduced(0.2, 0.2, 1.0, 1e-6, 6.0).unwrap();
    let serial = 2.0 * scan_reduced(0.2, 0.2, 2.0, 1e-6, 6.0).unwrap();
    assert!((parallel - 4.791288).abs() <= 1e-6, "{parallel}");
    assert!((serial - 9.123106).abs() <= 2e-6, "{serial}");

    assert!((min_cost(&w(0.2, 0.2), Topology::Parallel) - 4.791288).abs() <= 1e-6);
    assert!((min_cost(&w(0.2, 0.2), Topology::Serial) - 9.123106).abs() <= 1e-6);
}

#[test]
fn scan_agrees_on_a_fixed_lattice() {
    let step = 1e-5;
    for ia in 0..=12 {
        for ib in 0..=12 {
            let (a, b) = (ia as f64 * 0.125, ib as f64 * 0.125);
            for k in Topology::ALL {
                let sol = solve_reduced(&w(a, b), k);
                let scanned = scan_reduced(a, b, f64::from(k.index()), step, 20.0);
                match (sol.x_star(), scanned) {
                    (Some(x), Some(s)) => assert!((x - s).abs() <= 2e-5, "a={a} b={b} {k}: {x} vs {s}"),
                    // optimum beyond the scan window
                    (Some(x), None) => assert!(x > 20.0 - step, "a={a} b={b} {k}: {x}"),
                    (None, None) => {}
                    (None, Some(s)) => panic!("a={a} b={b} {k}: scan found {s}, solver infeasible"),
                }
            }
        }
    }
}

#[test]
fn infeasible_when_force_weight_vanishes() {
    assert!(!solve_reduced(&w(0.0, 0.3), Topology::Parallel).is_feasible());
    assert_eq!(scan_reduced(0.0, 0.3, 1.0, 1e-3, 20.0), None);
}

fn topology() -> impl Strategy<Value = Topology> {
    prop_oneof![Just(Topology::Parallel), Just(Topology::Serial)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scan_equivalence(a in 0.0..1.5f64, b in 0.0..1.5f64, k in topology()) {
        let step = 1e-5;
        let sol = solve_reduced(&w(a, b), k);
        let scanned = scan_reduced(a, b, f64::from(k.index()), step, 20.0);
        match (sol.x_star(), scanned) {
            (Some(x), Some(s)) => prop_assert!((x - s).abs() <= 2e-5, "{} vs {}", x, s),
            (Some(x), None) => prop_assert!(x > 20.0 - step),
            (None, None) => {}
            (None, Some(s)) => prop_assert!(false, "scan found {}", s),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn feasible_solutions_satisfy_both_constraints(a in 0.0..3.0f64, b in 0.0..3.0f64, k in topology()) {
        let sol = solve_reduced(&w(a, b), k);
        if let Some(opt) = sol.optimum {
            let x = opt.x_star;
            let kf = f64::from(k.index());
            prop_assert!(x >= 1.0);
            prop_assert!(a * x + kf * b / x >= 1.0 - 1e-12);
            prop_assert_eq!(sol.total_cost(), kf * x);
            if opt.active_constraint == ActiveConstraint::PerformanceRoot {
                prop_assert!(x > 1.0);
            }
        } else {
            prop_assert_eq!(sol.total_cost(), f64::INFINITY);
        }
    }

    #[test]
    fn shrinking_the_optimum_breaks_a_constraint(a in 1e-3..3.0f64, b in 0.0..3.0f64, k in topology()) {
        let sol = solve_reduced(&w(a, b), k);
        let x_star = sol.x_star().unwrap();
        let kf = f64::from(k.index());
        for eps in [1e-3, 1e-2, 1e-1] {
            let x = x_star * (1.0 - eps);
            prop_assert!(!(a * x + kf * b / x >= 1.0 && x >= 1.0), "x = {} still admissible", x);
        }
    }

    #[test]
    fn root_branch_iff_line_condition(a in 1e-6..3.0f64, b in 0.0..3.0f64, k in topology()) {
        let kf = f64::from(k.index());
        let inside = match roots(&w(a, b), k).unwrap() {
            Some((x1, x2)) => x1 < 1.0 && 1.0 < x2,
            None => false,
        };
        prop_assert_eq!(inside, a + kf * b - 1.0 < 0.0);
    }

    #[test]
    fn roots_satisfy_vieta(a in 1e-3..3.0f64, b in 0.0..3.0f64, k in topology()) {
        let kf = f64::from(k.index());
        if let Some((x1, x2)) = roots(&w(a, b), k).unwrap() {
            prop_assert!(x1 <= x2);
            prop_assert!((x1 + x2 - 1.0 / a).abs() <= 1e-9 * (1.0 / a));
            prop_assert!((x1 * x2 - kf * b / a).abs() <= 1e-9 * (1.0 + kf * b / a));
        } else {
            prop_assert!(1.0 - 4.0 * kf * a * b < 0.0);
        }
    }

    #[test]
    fn cost_is_non_increasing_in_each_weight(
        a in 0.0..2.0f64, b in 0.0..2.0f64, da in 0.0..0.5f64, db in 0.0..0.5f64, k in topology()
    ) {
        let base = min_cost(&w(a, b), k);
        prop_assert!(min_cost(&w(a + da, b), k) <= base);
        prop_assert!(min_cost(&w(a, b + db), k) <= base);
    }
}
