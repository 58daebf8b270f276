//! Physical quantities of a two-spring network.
//!
//! Each spring `i` has an elastic limit `c_i`, the largest force it carries
//! before yielding, and an electrical resistance `1 / c_i`. Wiring the two
//! springs in parallel or in series gives the network force capacity and
//! resistance evaluated here. Resistances use extended arithmetic: a zero
//! elastic limit yields `+inf` instead of a fault, so every constraint is
//! total on the closed quadrant `c1, c2 >= 0`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::Error;

/// Wiring of the two springs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Topology {
    Parallel,
    Serial,
}

impl Topology {
    pub const ALL: [Topology; 2] = [Topology::Parallel, Topology::Serial];

    /// Numeric tag: 1 for parallel, 2 for serial.
    ///
    /// The tag doubles as the multiplier that appears in the reduced
    /// one-variable problem (`a x + k b / x >= 1`, cost `k x`).
    pub fn index(self) -> u8 {
        match self {
            Topology::Parallel => 1,
            Topology::Serial => 2,
        }
    }

    pub(crate) fn factor(self) -> f64 {
        f64::from(self.index())
    }

    pub fn name(self) -> &'static str {
        match self {
            Topology::Parallel => "parallel",
            Topology::Serial => "serial",
        }
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Topology {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "parallel" | "1" => Ok(Topology::Parallel),
            "serial" | "series" | "2" => Ok(Topology::Serial),
            _ => Err(Error::UnknownTopology(s.to_owned())),
        }
    }
}

/// Elastic limits of the two springs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpringPair {
    c1: f64,
    c2: f64,
}

impl SpringPair {
    pub fn new(c1: f64, c2: f64) -> Result<Self, Error> {
        if !(c1 >= 0.0 && c1.is_finite()) {
            return Err(Error::InvalidElasticLimit(c1));
        }
        if !(c2 >= 0.0 && c2.is_finite()) {
            return Err(Error::InvalidElasticLimit(c2));
        }
        Ok(Self { c1, c2 })
    }

    /// Builds a pair without validation. Callers guarantee both limits are
    /// finite and nonnegative.
    pub(crate) fn new_unchecked(c1: f64, c2: f64) -> Self {
        debug_assert!(c1 >= 0.0 && c2 >= 0.0);
        Self { c1, c2 }
    }

    pub fn c1(&self) -> f64 {
        self.c1
    }

    pub fn c2(&self) -> f64 {
        self.c2
    }

    pub fn swapped(&self) -> Self {
        Self {
            c1: self.c2,
            c2: self.c1,
        }
    }
}

/// Weights of force capacity (`a`) and resistance (`b`) in the
/// multi-functional performance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Weights {
    a: f64,
    b: f64,
}

impl Weights {
    pub fn new(a: f64, b: f64) -> Result<Self, Error> {
        if !(a >= 0.0 && a.is_finite()) {
            return Err(Error::InvalidWeight { name: "a", value: a });
        }
        if !(b >= 0.0 && b.is_finite()) {
            return Err(Error::InvalidWeight { name: "b", value: b });
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }
}

/// Largest force the network carries before yielding.
pub fn force(topology: Topology, springs: &SpringPair) -> f64 {
    match topology {
        Topology::Parallel => springs.c1 + springs.c2,
        // series connection stops loading once the weaker spring yields
        Topology::Serial => springs.c1.min(springs.c2),
    }
}

/// Electrical resistance of the network, `+inf` when a divisor vanishes.
pub fn resistance(topology: Topology, springs: &SpringPair) -> f64 {
    match topology {
        Topology::Parallel => recip(springs.c1 + springs.c2),
        Topology::Serial => recip(springs.c1) + recip(springs.c2),
    }
}

/// Multi-functional performance `a * force + b * resistance`.
///
/// Uses `0 * inf = 0`, so a zero resistance weight silences an infinite
/// resistance on the boundary of the quadrant.
pub fn multiperf(weights: &Weights, topology: Topology, springs: &SpringPair) -> f64 {
    ext_mul(weights.a, force(topology, springs)) + ext_mul(weights.b, resistance(topology, springs))
}

/// Fabrication cost, independent of the wiring.
pub fn cost(springs: &SpringPair) -> f64 {
    springs.c1 + springs.c2
}

/// Whether `springs` satisfies both design constraints: performance at
/// least one and force capacity at least one.
pub fn is_admissible(weights: &Weights, topology: Topology, springs: &SpringPair) -> bool {
    multiperf(weights, topology, springs) >= 1.0 && force(topology, springs) >= 1.0
}

fn recip(x: f64) -> f64 {
    if x == 0.0 {
        f64::INFINITY
    } else {
        1.0 / x
    }
}

fn ext_mul(weight: f64, value: f64) -> f64 {
    if weight == 0.0 {
        0.0
    } else {
        weight * value
    }
}
