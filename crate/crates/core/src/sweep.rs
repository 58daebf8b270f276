//! Phase-diagram sweeps, region boundary polylines and oracle campaigns.
//!
//! Numbers are written in the shortest decimal form that parses back to
//! the same `f64`, with infinities spelled `inf`. Rows always come out in
//! a fixed order, so identical arguments give byte-identical files whether
//! or not the work ran in parallel.

use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::model::{Topology, Weights};
use crate::oracle::{verify_reduction, GridSpec, Verdict, Verification};
use crate::regions::{self, b2_boundary, RegionLabel, Winner, B2_A_MAX, B2_A_MIN};
use crate::Error;

/// Formats an extended real: shortest round-trip decimal, or `inf`.
pub fn format_real(x: f64) -> String {
    if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.to_owned()
    } else {
        format!("{x}")
    }
}

/// Inclusive uniform grid over the weight rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepSpec {
    pub a_min: f64,
    pub a_max: f64,
    pub b_min: f64,
    pub b_max: f64,
    pub na: usize,
    pub nb: usize,
}

impl SweepSpec {
    pub const DEFAULT_MAX: f64 = 1.2;
    pub const DEFAULT_SAMPLES: usize = 121;

    pub fn new(a_min: f64, a_max: f64, b_min: f64, b_max: f64, na: usize, nb: usize) -> Result<Self, Error> {
        let spec = Self {
            a_min,
            a_max,
            b_min,
            b_max,
            na,
            nb,
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<(), Error> {
        for (name, lo, hi) in [("a", self.a_min, self.a_max), ("b", self.b_min, self.b_max)] {
            if !(lo.is_finite() && hi.is_finite() && lo >= 0.0) {
                return Err(Error::InvalidSweep(format!(
                    "{name} range must be finite and nonnegative, got [{lo}, {hi}]"
                )));
            }
            if lo > hi {
                return Err(Error::InvalidSweep(format!("{name}_min {lo} exceeds {name}_max {hi}")));
            }
        }
        if self.na < 2 || self.nb < 2 {
            return Err(Error::InvalidSweep(format!(
                "need at least 2 samples per axis, got na = {}, nb = {}",
                self.na, self.nb
            )));
        }
        Ok(())
    }

    pub fn a_values(&self) -> Vec<f64> {
        axis(self.a_min, self.a_max, self.na)
    }

    pub fn b_values(&self) -> Vec<f64> {
        axis(self.b_min, self.b_max, self.nb)
    }

    /// Weight pairs in row-major order: `b` outer, `a` inner.
    pub fn points(&self) -> Vec<Weights> {
        let a_values = self.a_values();
        self.b_values()
            .into_iter()
            .flat_map(|b| a_values.iter().map(move |&a| (a, b)))
            .map(|(a, b)| Weights::new(a, b).expect("validated sweep range"))
            .collect()
    }
}

impl Default for SweepSpec {
    fn default() -> Self {
        Self {
            a_min: 0.0,
            a_max: Self::DEFAULT_MAX,
            b_min: 0.0,
            b_max: Self::DEFAULT_MAX,
            na: Self::DEFAULT_SAMPLES,
            nb: Self::DEFAULT_SAMPLES,
        }
    }
}

/// `n` evenly spaced values from `lo` to `hi`, both endpoints exact.
pub fn axis(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let last = (n - 1) as f64;
            (0..n)
                .map(|i| {
                    if i == n - 1 {
                        hi
                    } else {
                        lo + (hi - lo) * (i as f64 / last)
                    }
                })
                .collect()
        }
    }
}

/// One row of the phase diagram.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhaseCell {
    pub a: f64,
    pub b: f64,
    pub label: RegionLabel,
    pub winner: Winner,
    pub cost_parallel: f64,
    pub cost_serial: f64,
}

impl PhaseCell {
    pub fn at(weights: &Weights) -> Self {
        let report = regions::winner(weights);
        Self {
            a: weights.a(),
            b: weights.b(),
            label: report.label,
            winner: report.winner,
            cost_parallel: report.cost_parallel,
            cost_serial: report.cost_serial,
        }
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            format_real(self.a),
            format_real(self.b),
            self.label,
            self.winner,
            format_real(self.cost_parallel),
            format_real(self.cost_serial)
        )
    }
}

pub const PHASE_HEADER: &str = "a,b,region,winner,cost_parallel,cost_serial";

pub fn sweep_sequential(spec: &SweepSpec) -> Vec<PhaseCell> {
    spec.points().iter().map(PhaseCell::at).collect()
}

#[cfg(feature = "parallel")]
pub fn sweep_parallel(spec: &SweepSpec) -> Vec<PhaseCell> {
    use rayon::prelude::*;

    // indexed collect keeps row order
    spec.points().par_iter().map(PhaseCell::at).collect()
}

/// Evaluates every cell of the sweep in row-major order.
pub fn sweep(spec: &SweepSpec) -> Vec<PhaseCell> {
    #[cfg(feature = "parallel")]
    {
        sweep_parallel(spec)
    }
    #[cfg(not(feature = "parallel"))]
    {
        sweep_sequential(spec)
    }
}

pub fn write_phase_csv<W: Write>(cells: &[PhaseCell], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{PHASE_HEADER}")?;
    for cell in cells {
        writeln!(out, "{}", cell.csv_row())?;
    }
    out.flush()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Curve {
    /// `a + 2b = 1`, where the serial network leaves the strength bound.
    SerialStrength,
    /// `a + b = 1`, where the parallel network leaves the strength bound.
    ParallelStrength,
    /// `b = 2 - 4a`, where the parallel cost equals the serial cost 2.
    B2Boundary,
}

impl Curve {
    pub fn name(self) -> &'static str {
        match self {
            Curve::SerialStrength => "a+2b=1",
            Curve::ParallelStrength => "a+b=1",
            Curve::B2Boundary => "b=2-4a",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundaryPoint {
    pub curve: Curve,
    pub a: f64,
    pub b: f64,
}

pub const BOUNDARY_HEADER: &str = "curve,a,b";

/// Region boundaries as polylines with `resolution` vertices each.
///
/// The two straight lines run over `a` in `[0, 1]`; the B2 segment runs
/// over `[1/3, 3/7]`, from `(1/3, 2/3)` on `a + b = 1` to `(3/7, 2/7)` on
/// `a + 2b = 1`.
pub fn boundary_polylines(resolution: usize) -> Result<Vec<BoundaryPoint>, Error> {
    if resolution < 2 {
        return Err(Error::InvalidSweep(format!(
            "boundary resolution must be at least 2, got {resolution}"
        )));
    }
    let unit = axis(0.0, 1.0, resolution);
    let mut points = Vec::with_capacity(3 * resolution);
    points.extend(unit.iter().map(|&a| BoundaryPoint {
        curve: Curve::SerialStrength,
        a,
        b: (1.0 - a) / 2.0,
    }));
    points.extend(unit.iter().map(|&a| BoundaryPoint {
        curve: Curve::ParallelStrength,
        a,
        b: 1.0 - a,
    }));
    points.extend(axis(B2_A_MIN, B2_A_MAX, resolution).into_iter().map(|a| BoundaryPoint {
        curve: Curve::B2Boundary,
        a,
        b: b2_boundary(a).expect("segment stays inside its domain"),
    }));
    Ok(points)
}

pub fn write_boundaries_csv<W: Write>(points: &[BoundaryPoint], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{BOUNDARY_HEADER}")?;
    for p in points {
        writeln!(out, "{},{},{}", p.curve.name(), format_real(p.a), format_real(p.b))?;
    }
    out.flush()
}

/// Settings of an oracle verification campaign.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CampaignSpec {
    pub samples: usize,
    pub seed: u64,
    pub grid: GridSpec,
    pub tol: f64,
    /// Weights are drawn uniformly from `[0, weight_max]^2`.
    pub weight_max: f64,
}

impl CampaignSpec {
    pub const DEFAULT_WEIGHT_MAX: f64 = 1.5;

    /// Seeded, platform-independent weight samples.
    pub fn draw_weights(&self) -> Vec<Weights> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.samples)
            .map(|_| {
                let a = rng.random_range(0.0..=self.weight_max);
                let b = rng.random_range(0.0..=self.weight_max);
                Weights::new(a, b).expect("sampled weights are nonnegative")
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignSummary {
    pub checks: usize,
    pub agreed: usize,
    pub disagreed: usize,
    /// Checks whose exact optimum lies outside the grid window.
    pub outside_window: usize,
    /// Largest `|oracle cost - closed-form cost|` over checks where both
    /// are finite.
    pub worst_cost_gap: f64,
    pub worst_case: Option<Verification>,
    pub failures: Vec<Verification>,
}

impl CampaignSummary {
    pub fn all_agree(&self) -> bool {
        self.disagreed == 0
    }

    pub fn from_verifications(results: &[Verification]) -> Self {
        let failures: Vec<Verification> = results
            .iter()
            .filter(|v| v.verdict == Verdict::Disagree)
            .copied()
            .collect();
        let worst_case = results
            .iter()
            .filter(|v| v.cost_gap.is_some())
            .max_by(|x, y| {
                let gx = x.cost_gap.unwrap_or(0.0).abs();
                let gy = y.cost_gap.unwrap_or(0.0).abs();
                gx.total_cmp(&gy)
            })
            .copied();
        Self {
            checks: results.len(),
            agreed: results.len() - failures.len(),
            disagreed: failures.len(),
            outside_window: results.iter().filter(|v| v.outside_window).count(),
            worst_cost_gap: worst_case.and_then(|v| v.cost_gap).map_or(0.0, f64::abs),
            worst_case,
            failures,
        }
    }
}

/// Verifies both topologies at every weight pair, in input order.
pub fn verify_points(points: &[Weights], grid: &GridSpec, tol: f64) -> Vec<Verification> {
    let jobs: Vec<(Weights, Topology)> = points.iter().flat_map(|w| Topology::ALL.map(|k| (*w, k))).collect();

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        jobs.par_iter()
            .map(|(w, k)| verify_reduction(w, *k, grid, tol))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        jobs.iter().map(|(w, k)| verify_reduction(w, *k, grid, tol)).collect()
    }
}

/// Draws the campaign's weights and audits the closed form at each.
pub fn run_campaign(spec: &CampaignSpec) -> CampaignSummary {
    let points = spec.draw_weights();
    CampaignSummary::from_verifications(&verify_points(&points, &spec.grid, spec.tol))
}
