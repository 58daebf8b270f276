//! Closed-form solution of the one-variable reduced problems.
//!
//! For topology tag `k` the design problem collapses to
//!
//! ```text
//! x >= 0,  a x + k b / x >= 1,  x >= 1,  k x -> min
//! ```
//!
//! where `x = c1 + c2` for the parallel network and `x = c1 = c2` for the
//! serial one. The performance constraint is a quadratic in disguise:
//! `a x^2 - x + k b >= 0` for `x > 0`, with roots `x1 <= x2`. The minimum is
//! the upper root `x2` when `1` falls strictly between the roots, which for
//! nonnegative weights happens exactly when `a + k b < 1`; otherwise the
//! strength bound `x = 1` is optimal.

use serde::Serialize;

use crate::model::{Topology, Weights};
use crate::Error;

/// Constraint that binds at the reduced optimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ActiveConstraint {
    /// `x >= 1` binds and `x* = 1`.
    StrengthBound,
    /// The performance constraint binds at its upper root and `x* = x2 > 1`.
    PerformanceRoot,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReducedOptimum {
    pub x_star: f64,
    pub active_constraint: ActiveConstraint,
}

/// Outcome of the reduced problem for one topology.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedSolution {
    pub topology: Topology,
    /// `None` when the constraint set is empty.
    pub optimum: Option<ReducedOptimum>,
}

impl ReducedSolution {
    pub fn is_feasible(&self) -> bool {
        self.optimum.is_some()
    }

    pub fn x_star(&self) -> Option<f64> {
        self.optimum.map(|o| o.x_star)
    }

    pub fn active_constraint(&self) -> Option<ActiveConstraint> {
        self.optimum.map(|o| o.active_constraint)
    }

    /// Minimal fabrication cost `k x*`, or `+inf` when infeasible.
    pub fn total_cost(&self) -> f64 {
        match self.optimum {
            Some(o) => self.topology.factor() * o.x_star,
            None => f64::INFINITY,
        }
    }
}

/// Concrete optimal elastic limits for one topology.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DesignSolution {
    pub topology: Topology,
    pub c1_star: f64,
    pub c2_star: f64,
    pub total_cost: f64,
}

/// Solves the reduced problem for `topology` in closed form.
pub fn solve_reduced(weights: &Weights, topology: Topology) -> ReducedSolution {
    let (a, b) = (weights.a(), weights.b());
    let k = topology.factor();

    let optimum = if a == 0.0 {
        // only `k b / x >= 1` and `x >= 1` remain
        (k * b >= 1.0).then_some(ReducedOptimum {
            x_star: 1.0,
            active_constraint: ActiveConstraint::StrengthBound,
        })
    } else if a + k * b < 1.0 {
        // discriminant 1 - 4kab is positive here since 4kab <= (a + kb)^2 < 1
        let disc = 1.0 - 4.0 * k * a * b;
        Some(ReducedOptimum {
            x_star: (1.0 + disc.sqrt()) / (2.0 * a),
            active_constraint: ActiveConstraint::PerformanceRoot,
        })
    } else {
        Some(ReducedOptimum {
            x_star: 1.0,
            active_constraint: ActiveConstraint::StrengthBound,
        })
    };

    ReducedSolution { topology, optimum }
}

/// Expands a reduced optimum into elastic limits.
///
/// Serial networks use `c1 = c2 = x*`. Parallel networks accept any split
/// of `x*`; the equal split is returned.
pub fn expand(solution: &ReducedSolution) -> Result<DesignSolution, Error> {
    let x = solution.x_star().ok_or(Error::NoDesign(solution.topology))?;
    let (c1_star, c2_star) = match solution.topology {
        Topology::Parallel => (0.5 * x, 0.5 * x),
        Topology::Serial => (x, x),
    };
    Ok(DesignSolution {
        topology: solution.topology,
        c1_star,
        c2_star,
        total_cost: c1_star + c2_star,
    })
}

/// Solves and expands in one step.
pub fn solve(weights: &Weights, topology: Topology) -> Result<DesignSolution, Error> {
    expand(&solve_reduced(weights, topology))
}

/// Roots `x1 <= x2` of `a x^2 - x + k b = 0`.
///
/// Returns `Ok(None)` when the discriminant is negative, in which case the
/// performance constraint holds for every positive `x`.
pub fn roots(weights: &Weights, topology: Topology) -> Result<Option<(f64, f64)>, Error> {
    let (a, b) = (weights.a(), weights.b());
    if a == 0.0 {
        return Err(Error::ZeroForceWeight);
    }
    let kb = topology.factor() * b;
    let disc = 1.0 - 4.0 * a * kb;
    if disc < 0.0 {
        return Ok(None);
    }
    let q = 1.0 + disc.sqrt();
    let x2 = q / (2.0 * a);
    // x1 = 2kb / (1 + sqrt(disc)) avoids cancellation when 4akb is small
    let x1 = 2.0 * kb / q;
    Ok(Some((x1, x2)))
}

/// Cost of the cheapest design for `topology`, `+inf` when infeasible.
pub fn min_cost(weights: &Weights, topology: Topology) -> f64 {
    solve_reduced(weights, topology).total_cost()
}
