//! Minimal-cost design of two-spring elastoplastic networks.
//!
//! Two springs with elastic limits `c1, c2 >= 0` are wired in parallel or in
//! series. A design must carry a force of at least one and reach a
//! multi-functional performance `a * force + b * resistance` of at least
//! one; among admissible designs the one with the smallest fabrication cost
//! `c1 + c2` is sought.
//!
//! * [`model`] evaluates force, resistance, performance and cost.
//! * [`solver`] solves the problem in closed form for either wiring.
//! * [`regions`] labels the weight quadrant and picks the cheaper wiring.
//! * [`oracle`] re-solves the problem by brute-force grid search.
//! * [`sweep`] drives phase-diagram sweeps, boundary curves and
//!   verification campaigns, and formats their output.
//!
//! With the default `parallel` feature the grid oracle, sweeps and
//! campaigns run on the rayon thread pool. Results are identical with the
//! feature disabled.

pub mod model;
pub mod oracle;
pub mod regions;
pub mod solver;
pub mod sweep;

pub use model::{SpringPair, Topology, Weights};
pub use oracle::{GridSpec, OracleResult, Verdict, Verification};
pub use regions::{RegionLabel, RegionReport, Winner};
pub use solver::{ActiveConstraint, DesignSolution, ReducedSolution};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("elastic limit must be finite and nonnegative, got {0}")]
    InvalidElasticLimit(f64),
    #[error("weight {name} must be finite and nonnegative, got {value}")]
    InvalidWeight { name: &'static str, value: f64 },
    #[error("unknown topology {0:?}, expected \"parallel\" or \"serial\"")]
    UnknownTopology(String),
    #[error("no admissible {0} design exists for these weights")]
    NoDesign(Topology),
    #[error("roots are undefined for a zero force weight")]
    ZeroForceWeight,
    #[error("invalid grid: need 0 < step <= c_max, got c_max = {c_max}, step = {step}")]
    InvalidGrid { c_max: f64, step: f64 },
    #[error("invalid sweep: {0}")]
    InvalidSweep(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
