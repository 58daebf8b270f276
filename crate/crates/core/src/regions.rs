//! Region labels of the weight quadrant and the cheapest topology.
//!
//! The lines `a + 2b = 1` and `a + b = 1` split the quadrant into
//!
//! * `A`: `a + 2b < 1`, both topologies are limited by performance;
//! * `B`: `a + 2b >= 1` and `a + b < 1`, only the parallel one is;
//! * `C`: `a + b >= 1`, both sit on the strength bound (costs 1 and 2).
//!
//! Region `B` is refined into `B2`, where the parallel cost exceeds the
//! serial cost of 2 and the serial network wins, and `B1`, the rest.

use std::fmt;

use serde::Serialize;

use crate::model::{Topology, Weights};
use crate::solver::min_cost;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RegionLabel {
    A,
    B1,
    B2,
    C,
}

impl RegionLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            RegionLabel::A => "A",
            RegionLabel::B1 => "B1",
            RegionLabel::B2 => "B2",
            RegionLabel::C => "C",
        }
    }
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Winner {
    Parallel,
    Serial,
    /// Both costs finite and equal.
    Tie,
    /// Neither topology admits a design.
    #[serde(rename = "infeasible")]
    BothInfeasible,
}

impl Winner {
    pub fn as_str(self) -> &'static str {
        match self {
            Winner::Parallel => "parallel",
            Winner::Serial => "serial",
            Winner::Tie => "tie",
            Winner::BothInfeasible => "infeasible",
        }
    }

    pub fn topology(self) -> Option<Topology> {
        match self {
            Winner::Parallel => Some(Topology::Parallel),
            Winner::Serial => Some(Topology::Serial),
            Winner::Tie | Winner::BothInfeasible => None,
        }
    }
}

impl fmt::Display for Winner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegionReport {
    pub label: RegionLabel,
    pub winner: Winner,
    pub cost_parallel: f64,
    pub cost_serial: f64,
}

fn label_with(weights: &Weights, cost_parallel: f64) -> RegionLabel {
    let (a, b) = (weights.a(), weights.b());
    if a + 2.0 * b < 1.0 {
        RegionLabel::A
    } else if a + b >= 1.0 {
        RegionLabel::C
    } else if cost_parallel > 2.0 {
        // +inf > 2 puts the a = 0 strip of B here
        RegionLabel::B2
    } else {
        RegionLabel::B1
    }
}

pub fn classify(weights: &Weights) -> RegionLabel {
    label_with(weights, min_cost(weights, Topology::Parallel))
}

/// Region label plus the strict argmin over both topology costs.
pub fn winner(weights: &Weights) -> RegionReport {
    let cost_parallel = min_cost(weights, Topology::Parallel);
    let cost_serial = min_cost(weights, Topology::Serial);
    let winner = if cost_parallel < cost_serial {
        Winner::Parallel
    } else if cost_serial < cost_parallel {
        Winner::Serial
    } else if cost_parallel.is_finite() {
        Winner::Tie
    } else {
        Winner::BothInfeasible
    };
    RegionReport {
        label: label_with(weights, cost_parallel),
        winner,
        cost_parallel,
        cost_serial,
    }
}

/// Lower limit of `a` on the B2 boundary, where it meets `a + b = 1`.
pub const B2_A_MIN: f64 = 1.0 / 3.0;
/// Upper limit of `a` on the B2 boundary, where it meets `a + 2b = 1`.
pub const B2_A_MAX: f64 = 3.0 / 7.0;

/// The curve on which the parallel cost equals 2 inside region B.
///
/// Substituting `b = 2 - 4a` turns the discriminant into `(4a - 1)^2`, so the
/// parallel cost is exactly 2 along the whole line for `a > 1/4`. The line
/// crosses the closure of B for `a` in `[1/3, 3/7]`; outside that interval
/// `None` is returned.
pub fn b2_boundary(a: f64) -> Option<f64> {
    (B2_A_MIN..=B2_A_MAX).contains(&a).then_some(2.0 - 4.0 * a)
}
