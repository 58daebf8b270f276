//! JSON records printed by the single-instance subcommands.
//!
//! Extended reals serialize as numbers when finite and as the string
//! `"inf"` otherwise, matching the CSV output.

use serde::{Serialize, Serializer};
use springnet::oracle::{Mismatch, Verification};
use springnet::solver::{expand, ActiveConstraint, ReducedSolution};
use springnet::sweep::{CampaignSpec, CampaignSummary};
use springnet::{RegionReport, Topology, Weights};

fn ext<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    if x.is_finite() {
        s.serialize_f64(*x)
    } else {
        s.serialize_str(&springnet::sweep::format_real(*x))
    }
}

fn ext_opt<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => ext(v, s),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Serialize)]
pub struct SolveRecord {
    pub a: f64,
    pub b: f64,
    pub topology: Topology,
    pub feasible: bool,
    pub x_star: Option<f64>,
    pub c1_star: Option<f64>,
    pub c2_star: Option<f64>,
    #[serde(serialize_with = "ext")]
    pub total_cost: f64,
    pub active_constraint: Option<ActiveConstraint>,
}

impl SolveRecord {
    pub fn new(weights: &Weights, solution: &ReducedSolution) -> Self {
        let design = expand(solution).ok();
        Self {
            a: weights.a(),
            b: weights.b(),
            topology: solution.topology,
            feasible: solution.is_feasible(),
            x_star: solution.x_star(),
            c1_star: design.map(|d| d.c1_star),
            c2_star: design.map(|d| d.c2_star),
            total_cost: solution.total_cost(),
            active_constraint: solution.active_constraint(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ClassifyRecord {
    pub a: f64,
    pub b: f64,
    pub region: &'static str,
    pub winner: &'static str,
    #[serde(serialize_with = "ext")]
    pub cost_parallel: f64,
    #[serde(serialize_with = "ext")]
    pub cost_serial: f64,
}

impl ClassifyRecord {
    pub fn new(weights: &Weights, report: &RegionReport) -> Self {
        Self {
            a: weights.a(),
            b: weights.b(),
            region: report.label.as_str(),
            winner: report.winner.as_str(),
            cost_parallel: report.cost_parallel,
            cost_serial: report.cost_serial,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CheckRecord {
    pub a: f64,
    pub b: f64,
    pub topology: Topology,
    pub mismatch: Option<Mismatch>,
    #[serde(serialize_with = "ext")]
    pub closed_form_cost: f64,
    #[serde(serialize_with = "ext")]
    pub oracle_cost: f64,
    #[serde(serialize_with = "ext_opt")]
    pub cost_gap: Option<f64>,
    pub allowance: f64,
    pub oracle_c1: Option<f64>,
    pub oracle_c2: Option<f64>,
}

impl From<&Verification> for CheckRecord {
    fn from(v: &Verification) -> Self {
        Self {
            a: v.weights.a(),
            b: v.weights.b(),
            topology: v.topology,
            mismatch: v.mismatch,
            closed_form_cost: v.closed_form_cost,
            oracle_cost: v.oracle.best_cost,
            cost_gap: v.cost_gap,
            allowance: v.allowance,
            oracle_c1: v.oracle.best_pair.map(|p| p.c1()),
            oracle_c2: v.oracle.best_pair.map(|p| p.c2()),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyRecord {
    pub samples: usize,
    pub seed: Option<u64>,
    pub c_max: f64,
    pub step: f64,
    pub tol: f64,
    pub checks: usize,
    pub agreed: usize,
    pub disagreed: usize,
    pub outside_window: usize,
    pub worst_cost_gap: f64,
    pub worst_case: Option<CheckRecord>,
    pub failures: Vec<CheckRecord>,
    pub passed: bool,
}

impl VerifyRecord {
    pub fn new(spec: &CampaignSpec, seed: Option<u64>, summary: &CampaignSummary) -> Self {
        Self {
            samples: spec.samples,
            seed,
            c_max: spec.grid.c_max(),
            step: spec.grid.step(),
            tol: spec.tol,
            checks: summary.checks,
            agreed: summary.agreed,
            disagreed: summary.disagreed,
            outside_window: summary.outside_window,
            worst_cost_gap: summary.worst_cost_gap,
            worst_case: summary.worst_case.as_ref().map(CheckRecord::from),
            failures: summary.failures.iter().map(CheckRecord::from).collect(),
            passed: summary.all_agree(),
        }
    }
}
