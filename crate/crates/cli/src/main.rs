//! `springnet`: solve, classify and sweep two-spring network designs.
//!
//! Exit status: 0 on success (infeasible answers included), 1 when an
//! oracle verification disagrees, 2 on usage errors, 3 on I/O errors.

mod records;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use springnet::oracle::GridSpec;
use springnet::sweep::{self, CampaignSpec, CampaignSummary, SweepSpec};
use springnet::{regions, solver, Topology, Weights};

use records::{ClassifyRecord, SolveRecord, VerifyRecord};

const EXIT_DISAGREE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "springnet",
    version,
    about = "Cheapest two-spring network designs and topology phase diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal-cost design for one topology (JSON record).
    Solve {
        #[command(flatten)]
        weights: WeightArgs,
        #[arg(long, value_parser = parse_topology)]
        topology: Topology,
    },
    /// Region label and cheaper topology (JSON record).
    Classify {
        #[command(flatten)]
        weights: WeightArgs,
    },
    /// Phase diagram over a rectangle of weights (CSV).
    Sweep {
        #[arg(long, default_value_t = 0.0)]
        a_min: f64,
        #[arg(long, default_value_t = SweepSpec::DEFAULT_MAX)]
        a_max: f64,
        #[arg(long, default_value_t = 0.0)]
        b_min: f64,
        #[arg(long, default_value_t = SweepSpec::DEFAULT_MAX)]
        b_max: f64,
        #[arg(long, default_value_t = SweepSpec::DEFAULT_SAMPLES)]
        na: usize,
        #[arg(long, default_value_t = SweepSpec::DEFAULT_SAMPLES)]
        nb: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Region boundary polylines (CSV).
    Boundaries {
        /// Vertices per polyline.
        #[arg(long, default_value_t = 101)]
        na: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Audit the closed form against the brute-force grid oracle.
    Verify {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = GridSpec::DEFAULT_C_MAX)]
        c_max: f64,
        #[arg(long, default_value_t = GridSpec::DEFAULT_STEP)]
        step: f64,
        #[arg(long, default_value_t = 0.01)]
        tol: f64,
        /// Check this force weight only (requires --b); skips sampling.
        #[arg(long, requires = "b")]
        a: Option<f64>,
        /// Check this resistance weight only (requires --a).
        #[arg(long, requires = "a")]
        b: Option<f64>,
    },
}

#[derive(Args, Debug)]
struct WeightArgs {
    #[arg(long, allow_negative_numbers = true)]
    a: f64,
    #[arg(long, allow_negative_numbers = true)]
    b: f64,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_topology(s: &str) -> Result<Topology, String> {
    s.parse().map_err(|e: springnet::Error| e.to_string())
}

enum Failure {
    Usage(String),
    Io(io::Error),
    Disagree,
}

impl From<springnet::Error> for Failure {
    fn from(e: springnet::Error) -> Self {
        match e {
            springnet::Error::Io(e) => Failure::Io(e),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn weights(args: &WeightArgs) -> Result<Weights, Failure> {
    Ok(Weights::new(args.a, args.b)?)
}

fn open_output(output: &OutputArgs) -> Result<Box<dyn Write>, Failure> {
    Ok(match &output.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Solve {
            weights: args,
            topology,
        } => {
            let w = weights(&args)?;
            print_json(&SolveRecord::new(&w, &solver::solve_reduced(&w, topology)))
        }
        Command::Classify { weights: args } => {
            let w = weights(&args)?;
            print_json(&ClassifyRecord::new(&w, &regions::winner(&w)))
        }
        Command::Sweep {
            a_min,
            a_max,
            b_min,
            b_max,
            na,
            nb,
            output,
        } => {
            let spec = SweepSpec::new(a_min, a_max, b_min, b_max, na, nb)?;
            let cells = sweep::sweep(&spec);
            sweep::write_phase_csv(&cells, open_output(&output)?)?;
            Ok(())
        }
        Command::Boundaries { na, output } => {
            let points = sweep::boundary_polylines(na)?;
            sweep::write_boundaries_csv(&points, open_output(&output)?)?;
            Ok(())
        }
        Command::Verify {
            samples,
            seed,
            c_max,
            step,
            tol,
            a,
            b,
        } => {
            if samples == 0 {
                return Err(Failure::Usage("--samples must be at least 1".into()));
            }
            if !(tol > 0.0 && tol.is_finite()) {
                return Err(Failure::Usage(format!("--tol must be positive, got {tol}")));
            }
            let grid = GridSpec::new(c_max, step)?;
            let mut spec = CampaignSpec {
                samples,
                seed,
                grid,
                tol,
                weight_max: CampaignSpec::DEFAULT_WEIGHT_MAX,
            };
            let (summary, seed) = match (a, b) {
                (Some(a), Some(b)) => {
                    let w = Weights::new(a, b)?;
                    spec.samples = 1;
                    let results = sweep::verify_points(&[w], &grid, tol);
                    (CampaignSummary::from_verifications(&results), None)
                }
                _ => (sweep::run_campaign(&spec), Some(seed)),
            };
            for f in &summary.failures {
                eprintln!(
                    "disagreement at a={} b={} topology={}: {:?}",
                    f.weights.a(),
                    f.weights.b(),
                    f.topology,
                    f.mismatch
                );
            }
            print_json(&VerifyRecord::new(&spec, seed, &summary))?;
            if summary.all_agree() {
                Ok(())
            } else {
                Err(Failure::Disagree)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_IO)
        }
        Err(Failure::Disagree) => ExitCode::from(EXIT_DISAGREE),
    }
}
