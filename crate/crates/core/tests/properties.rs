use proptest::prelude::*;
use springnet::model::{cost, force, multiperf, resistance};
use springnet::oracle::{oracle_solve, GridSpec};
use springnet::regions::{b2_boundary, classify, winner, RegionLabel, Winner};
use springnet::solver::min_cost;
use springnet::{SpringPair, Topology, Weights};

fn pair(c1: f64, c2: f64) -> SpringPair {
    SpringPair::new(c1, c2).unwrap()
}

fn w(a: f64, b: f64) -> Weights {
    Weights::new(a, b).unwrap()
}

fn close(x: f64, y: f64) -> bool {
    x == y || (x - y).abs() <= 1e-12 * x.abs().max(y.abs())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn parallel_carries_at_least_the_serial_force(c1 in 0.0..1e3f64, c2 in 0.0..1e3f64) {
        let s = pair(c1, c2);
        prop_assert!(force(Topology::Parallel, &s) >= force(Topology::Serial, &s));
    }

    #[test]
    fn serial_resists_at_least_as_much(c1 in 1e-6..1e3f64, c2 in 1e-6..1e3f64) {
        let s = pair(c1, c2);
        prop_assert!(resistance(Topology::Serial, &s) >= resistance(Topology::Parallel, &s));
    }

    #[test]
    fn swapping_springs_changes_nothing(
        c1 in 0.0..10.0f64, c2 in 0.0..10.0f64, a in 0.0..2.0f64, b in 0.0..2.0f64
    ) {
        let s = pair(c1, c2);
        let t = s.swapped();
        let wt = w(a, b);
        prop_assert_eq!(cost(&s), cost(&t));
        for k in Topology::ALL {
            prop_assert_eq!(force(k, &s), force(k, &t));
            prop_assert_eq!(resistance(k, &s), resistance(k, &t));
            prop_assert_eq!(multiperf(&wt, k, &s), multiperf(&wt, k, &t));
        }
    }

    #[test]
    fn scaling_springs(c1 in 1e-3..10.0f64, c2 in 1e-3..10.0f64, t in 1e-2..1e2f64) {
        let s = pair(c1, c2);
        let scaled = pair(t * c1, t * c2);
        prop_assert!(close(cost(&scaled), t * cost(&s)));
        for k in Topology::ALL {
            prop_assert!(close(force(k, &scaled), t * force(k, &s)));
            prop_assert!(close(resistance(k, &scaled), resistance(k, &s) / t));
        }
    }

    #[test]
    fn exactly_one_region(a in 0.0..3.0f64, b in 0.0..3.0f64) {
        let cp = min_cost(&w(a, b), Topology::Parallel);
        let preds = [
            a + 2.0 * b - 1.0 < 0.0,
            a + 2.0 * b - 1.0 >= 0.0 && a + b - 1.0 < 0.0 && cp <= 2.0,
            a + 2.0 * b - 1.0 >= 0.0 && a + b - 1.0 < 0.0 && cp > 2.0,
            a + b - 1.0 >= 0.0,
        ];
        prop_assert_eq!(preds.iter().filter(|&&p| p).count(), 1);
        let expected = [RegionLabel::A, RegionLabel::B1, RegionLabel::B2, RegionLabel::C]
            [preds.iter().position(|&p| p).unwrap()];
        prop_assert_eq!(classify(&w(a, b)), expected);
    }

    #[test]
    fn serial_wins_exactly_in_b2(a in 0.0..3.0f64, b in 0.0..3.0f64) {
        let r = winner(&w(a, b));
        if (r.cost_parallel - r.cost_serial).abs() > 1e-9 {
            prop_assert_eq!(r.winner == Winner::Serial, r.label == RegionLabel::B2);
            prop_assert_eq!(r.winner == Winner::Parallel, r.label != RegionLabel::B2);
        }
    }

    #[test]
    fn report_invariants(a in 0.0..3.0f64, b in 0.0..3.0f64) {
        let r = winner(&w(a, b));
        match r.winner {
            Winner::Parallel => prop_assert!(r.cost_parallel < r.cost_serial),
            Winner::Serial => prop_assert!(r.cost_serial < r.cost_parallel),
            Winner::Tie => prop_assert!(r.cost_parallel.is_finite() && r.cost_parallel == r.cost_serial),
            Winner::BothInfeasible => {
                prop_assert!(r.cost_parallel.is_infinite() && r.cost_serial.is_infinite())
            }
        }
    }

    #[test]
    fn region_c_costs_are_one_and_two(a in 0.0..3.0f64, b in 0.0..3.0f64) {
        prop_assume!(a + b >= 1.0);
        let r = winner(&w(a, b));
        prop_assert_eq!((r.cost_parallel, r.cost_serial), (1.0, 2.0));
    }

    #[test]
    fn boundary_flips_the_winner(a in 0.3334..0.4285f64) {
        let b = b2_boundary(a).unwrap();
        let below = winner(&w(a, b - 1e-6));
        let above = winner(&w(a, b + 1e-6));
        prop_assert_eq!(below.winner, Winner::Serial);
        prop_assert_eq!(above.winner, Winner::Parallel);
    }
}

#[test]
fn boundary_curve_has_parallel_cost_two() {
    for i in 0..=8 {
        let a = 0.26 + 0.02 * i as f64;
        let b = 2.0 - 4.0 * a;
        let inside_b = a + 2.0 * b >= 1.0 && a + b < 1.0;
        if inside_b {
            let cp = min_cost(&w(a, b), Topology::Parallel);
            assert!((cp - 2.0).abs() <= 1e-12, "a = {a}: {cp}");
            assert_eq!(b2_boundary(a), Some(b));
        }
    }
}

#[test]
fn oracle_is_deterministic() {
    let g = GridSpec::new(4.0, 0.01).unwrap();
    for (a, b) in [(0.2, 0.7), (0.5, 0.5), (1.2, 0.1)] {
        for k in Topology::ALL {
            assert_eq!(oracle_solve(&w(a, b), k, &g), oracle_solve(&w(a, b), k, &g));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn oracle_brackets_the_closed_form(a in 0.3..1.5f64, b in 0.0..1.5f64, k in prop_oneof![Just(Topology::Parallel), Just(Topology::Serial)]) {
        let g = GridSpec::new(4.0, 0.01).unwrap();
        let exact = min_cost(&w(a, b), k);
        let found = oracle_solve(&w(a, b), k, &g);
        prop_assume!(exact.is_finite() && found.is_feasible());
        let kf = f64::from(k.index());
        prop_assert!(found.best_cost >= exact - 1e-9);
        prop_assert!(found.best_cost - exact <= 2.0 * g.step() * (1.0 + a + kf * b));
        if k == Topology::Serial {
            prop_assert!(found.argmin_gap <= g.step());
        }
    }
}
