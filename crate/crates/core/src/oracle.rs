//! Brute-force grid search over the original two-variable problem.
//!
//! The oracle scans `(c1, c2)` on a uniform grid over `[0, c_max]^2` and
//! keeps the cheapest point that passes both design constraints, using the
//! evaluators in [`crate::model`] directly. It never touches the reduced
//! problem or its closed form, so it can be used to audit them.
//!
//! Grid points are addressed by integer indices `(i, j)` with
//! `c1 = i * step` and `c2 = j * step`. Candidates are ranked by the key
//! `(i + j, |i - j|, i)`: lowest cost first, then the most balanced pair,
//! then the smaller `c1`. The key is a total order, so the parallel
//! reduction gives the same answer as the sequential scan for any
//! partitioning of the rows.

use serde::Serialize;

use crate::model::{self, SpringPair, Topology, Weights};
use crate::solver::{solve_reduced, ReducedSolution};
use crate::Error;

/// Search square `[0, c_max]^2` sampled at pitch `step`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    c_max: f64,
    step: f64,
}

impl GridSpec {
    pub const DEFAULT_C_MAX: f64 = 6.0;
    pub const DEFAULT_STEP: f64 = 0.005;

    pub fn new(c_max: f64, step: f64) -> Result<Self, Error> {
        if !(c_max.is_finite() && step.is_finite() && step > 0.0 && step <= c_max) {
            return Err(Error::InvalidGrid { c_max, step });
        }
        Ok(Self { c_max, step })
    }

    pub fn c_max(&self) -> f64 {
        self.c_max
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    /// Number of grid values per axis, endpoints included.
    pub fn points_per_axis(&self) -> usize {
        // tolerate c_max / step landing a hair below an integer
        let ratio = self.c_max / self.step;
        (ratio * (1.0 + 1e-12)).floor() as usize + 1
    }

    fn coord(&self, index: usize) -> f64 {
        index as f64 * self.step
    }

    /// Largest grid coordinate; equals `c_max` when `step` divides it.
    pub fn last_coord(&self) -> f64 {
        self.coord(self.points_per_axis() - 1)
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            c_max: Self::DEFAULT_C_MAX,
            step: Self::DEFAULT_STEP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleResult {
    /// Cheapest admissible grid point, `None` when no grid point qualifies.
    pub best_pair: Option<SpringPair>,
    /// Cost of `best_pair`, `+inf` when infeasible.
    pub best_cost: f64,
    /// `|c1 - c2|` of `best_pair`, zero when infeasible.
    pub argmin_gap: f64,
    /// Set when the argmin lies on the outer edge `c = c_max`, so a larger
    /// window could hold a cheaper design.
    pub touches_boundary: bool,
}

impl OracleResult {
    pub fn is_feasible(&self) -> bool {
        self.best_pair.is_some()
    }
}

type Key = (usize, usize, usize);

fn key(i: usize, j: usize) -> Key {
    (i + j, i.abs_diff(j), i)
}

/// Cheapest admissible point in row `i` (fixed `c1`).
///
/// Along a row cost grows with `j`, so the first admissible `j` is the
/// row's best under the ranking key.
fn scan_row(weights: &Weights, topology: Topology, grid: &GridSpec, n: usize, i: usize) -> Option<Key> {
    let c1 = grid.coord(i);
    (0..n)
        .find(|&j| model::is_admissible(weights, topology, &SpringPair::new_unchecked(c1, grid.coord(j))))
        .map(|j| key(i, j))
}

fn finish(grid: &GridSpec, n: usize, best: Option<Key>) -> OracleResult {
    match best {
        Some((sum, _, i)) => {
            let j = sum - i;
            let pair = SpringPair::new_unchecked(grid.coord(i), grid.coord(j));
            OracleResult {
                best_pair: Some(pair),
                best_cost: model::cost(&pair),
                argmin_gap: (pair.c1() - pair.c2()).abs(),
                touches_boundary: i == n - 1 || j == n - 1,
            }
        }
        None => OracleResult {
            best_pair: None,
            best_cost: f64::INFINITY,
            argmin_gap: 0.0,
            touches_boundary: false,
        },
    }
}

/// Single-threaded grid scan.
pub fn oracle_solve_sequential(weights: &Weights, topology: Topology, grid: &GridSpec) -> OracleResult {
    let n = grid.points_per_axis();
    let best = (0..n).filter_map(|i| scan_row(weights, topology, grid, n, i)).min();
    finish(grid, n, best)
}

/// Grid scan with rows distributed over the rayon pool.
#[cfg(feature = "parallel")]
pub fn oracle_solve_parallel(weights: &Weights, topology: Topology, grid: &GridSpec) -> OracleResult {
    use rayon::prelude::*;

    let n = grid.points_per_axis();
    let best = (0..n)
        .into_par_iter()
        .filter_map(|i| scan_row(weights, topology, grid, n, i))
        .min();
    finish(grid, n, best)
}

/// Solves the design problem by exhaustive grid search.
///
/// Runs on the rayon pool when the `parallel` feature is enabled.
pub fn oracle_solve(weights: &Weights, topology: Topology, grid: &GridSpec) -> OracleResult {
    #[cfg(feature = "parallel")]
    {
        oracle_solve_parallel(weights, topology, grid)
    }
    #[cfg(not(feature = "parallel"))]
    {
        oracle_solve_sequential(weights, topology, grid)
    }
}

/// Slack allowed between the grid optimum and the exact optimum.
///
/// Rounding a continuous optimum up to the grid moves each coordinate by
/// less than one step; the constraints are Lipschitz in the coordinates
/// with a constant of order `1 + a + k b` near the optimum.
pub fn discretization_allowance(weights: &Weights, topology: Topology, grid: &GridSpec) -> f64 {
    2.0 * grid.step * (1.0 + weights.a() + f64::from(topology.index()) * weights.b())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Agree,
    Disagree,
}

/// Why a verification disagreed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mismatch {
    /// One side found a design inside the window and the other did not.
    Feasibility,
    /// Costs differ by more than the tolerance plus discretization slack.
    CostGap,
    /// The serial grid optimum is not on the diagonal `c1 = c2`.
    OffDiagonal,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Verification {
    pub weights: Weights,
    pub topology: Topology,
    pub verdict: Verdict,
    pub mismatch: Option<Mismatch>,
    pub closed_form_cost: f64,
    pub oracle: OracleResult,
    /// `oracle.best_cost - closed_form_cost` when both are finite.
    pub cost_gap: Option<f64>,
    /// Largest accepted `|cost_gap|`.
    pub allowance: f64,
    /// The exact optimum lies outside the search window, so the oracle is
    /// expected to come back empty.
    pub outside_window: bool,
}

/// Cross-checks the closed-form cost against the grid oracle.
///
/// The oracle only sees `[0, c_max]^2`. An exact optimum that does not fit
/// in that window (a parallel total above `2 c_max`, a serial limit above
/// `c_max`) cannot be witnessed, and no cheaper admissible point exists
/// inside it, so agreement there means the oracle finds nothing. Optima
/// within two steps of the window edge are accepted either way.
pub fn verify_reduction(weights: &Weights, topology: Topology, grid: &GridSpec, tol: f64) -> Verification {
    let reduced = solve_reduced(weights, topology);
    let closed_form_cost = reduced.total_cost();
    let oracle = oracle_solve(weights, topology, grid);
    let allowance = tol + discretization_allowance(weights, topology, grid);

    let mismatch = assess(&reduced, &oracle, grid, allowance);
    let cost_gap = (oracle.is_feasible() && reduced.is_feasible()).then_some(oracle.best_cost - closed_form_cost);

    Verification {
        weights: *weights,
        topology,
        verdict: if mismatch.is_none() {
            Verdict::Agree
        } else {
            Verdict::Disagree
        },
        mismatch,
        closed_form_cost,
        oracle,
        cost_gap,
        allowance,
        outside_window: reduced.x_star().is_some_and(|x| x > window_reach(topology, grid)),
    }
}

/// Largest reduced variable `x` whose expanded design fits in the window.
fn window_reach(topology: Topology, grid: &GridSpec) -> f64 {
    match topology {
        Topology::Parallel => 2.0 * grid.last_coord(),
        Topology::Serial => grid.last_coord(),
    }
}

fn assess(reduced: &ReducedSolution, oracle: &OracleResult, grid: &GridSpec, allowance: f64) -> Option<Mismatch> {
    let near_edge = reduced
        .x_star()
        .is_some_and(|x| x > window_reach(reduced.topology, grid) - 2.0 * grid.step);

    match (reduced.is_feasible(), oracle.is_feasible()) {
        (false, false) => None,
        (true, false) if near_edge => None,
        (false, true) | (true, false) => Some(Mismatch::Feasibility),
        (true, true) => {
            let gap = oracle.best_cost - reduced.total_cost();
            if gap.is_nan() || gap.abs() > allowance {
                Some(Mismatch::CostGap)
            } else if reduced.topology == Topology::Serial && oracle.argmin_gap > grid.step * (1.0 + 1e-9) {
                Some(Mismatch::OffDiagonal)
            } else {
                None
            }
        }
    }
}
