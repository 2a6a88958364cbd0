//! Command-line front end.
//!
//! Every subcommand validates its flags into library types before any
//! computation starts, then renders one artifact as CSV or JSON.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::chain::{ChainModel, StartKind};
use crate::coverage::{
    expected_coverage_exact, expected_coverage_multi, expected_coverage_naive_multi, CoverageCurve,
};
use crate::dependence::{check_successive_dependence, check_two_step_dependence, Verdict};
use crate::error::{Error, Result};
use crate::io::{self, Comparison};
use crate::lattice::{Borders, Coord, GridSpec};
use crate::montecarlo::{simulate_coverage, SimConfig};

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "gridwalk", version, about = "Coverage of symmetric random walks on lattices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads for the parallel sweeps (default: available parallelism).
    #[arg(long, global = true, env = "GRIDWALK_THREADS")]
    pub threads: Option<usize>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Output file (default: standard output).
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Transition matrix, optionally with one absorbing state.
    Matrix {
        #[command(flatten)]
        grid: GridArgs,
        /// Make this state (1-based index) absorbing.
        #[arg(long)]
        absorb: Option<usize>,
    },
    /// Exact expected-coverage curve (optionally with the naive formula).
    Coverage {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        start: StartArgs,
        #[command(flatten)]
        walk: WalkArgs,
        /// Also emit the independence-assuming curve.
        #[arg(long)]
        naive: bool,
    },
    /// Monte Carlo estimate of the coverage curve.
    Simulate {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        start: StartArgs,
        #[command(flatten)]
        walk: WalkArgs,
        #[command(flatten)]
        mc: McArgs,
    },
    /// Exact vs naive vs Monte Carlo on one step axis.
    Compare {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        start: StartArgs,
        #[command(flatten)]
        walk: WalkArgs,
        #[command(flatten)]
        mc: McArgs,
    },
    /// Dependence of occupancy events at one cell.
    Dependence {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        start: StartArgs,
        /// Cell `x,y[,z]` whose occupancy events are checked.
        #[arg(long, value_parser = parse_cell)]
        cell: Coord,
        /// Time step m.
        #[arg(long, default_value_t = 0)]
        time: usize,
        /// Check {X_m=z} vs {X_(m+1)=z} instead of {X_(m+2)=z}.
        #[arg(long)]
        successive: bool,
    },
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long)]
    pub width: usize,
    #[arg(long)]
    pub depth: usize,
    /// 1 for a planar grid.
    #[arg(long, default_value_t = 1)]
    pub height: usize,
    /// Bordered walk (default).
    #[arg(long, conflicts_with = "boundless")]
    pub borders: bool,
    /// Wrap-around walk.
    #[arg(long)]
    pub boundless: bool,
}

impl GridArgs {
    pub fn spec(&self) -> Result<GridSpec> {
        let borders = if self.boundless {
            Borders::Boundless
        } else {
            Borders::Bordered
        };
        GridSpec::new(self.width, self.depth, self.height, borders)
    }
}

#[derive(Debug, Args)]
pub struct StartArgs {
    /// Start cell `x,y[,z]`.
    #[arg(long, value_parser = parse_cell, conflicts_with = "uniform")]
    pub start_cell: Option<Coord>,
    /// Uniform start over all cells (default).
    #[arg(long)]
    pub uniform: bool,
}

impl StartArgs {
    pub fn kind(&self, spec: &GridSpec) -> Result<StartKind> {
        match self.start_cell {
            Some(c) => Ok(StartKind::Deterministic(spec.index_of(c)?)),
            None => Ok(StartKind::Uniform),
        }
    }
}

#[derive(Debug, Args)]
pub struct WalkArgs {
    /// Last time step n_max.
    #[arg(long, default_value_t = 50)]
    pub steps: usize,
    /// Number of independently moving agents.
    #[arg(long, default_value_t = 1)]
    pub uavs: u32,
}

#[derive(Debug, Args)]
pub struct McArgs {
    #[arg(long, default_value_t = 10_000)]
    pub replications: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

fn parse_cell(s: &str) -> std::result::Result<Coord, String> {
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| format!("`{p}`: {e}")))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    match parts[..] {
        [x, y] => Ok(Coord::planar(x, y)),
        [x, y, z] => Ok(Coord::new(x, y, z)),
        _ => Err(format!("expected x,y or x,y,z, got `{s}`")),
    }
}

/// Exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceGuard { .. } => EXIT_RESOURCE,
        Error::Io(_) => EXIT_IO,
        _ => EXIT_USAGE,
    }
}

fn check_uavs(k: u32) -> Result<()> {
    if k < 1 {
        return Err(Error::param("--uavs", "must be at least 1"));
    }
    Ok(())
}

fn check_replications(r: u64) -> Result<()> {
    if r < 1 {
        return Err(Error::param("--replications", "must be at least 1"));
    }
    Ok(())
}

fn model(grid: &GridArgs, start: &StartArgs) -> Result<ChainModel> {
    let spec = grid.spec()?;
    let kind = start.kind(&spec)?;
    ChainModel::new(spec, kind)
}

fn exact_curve(m: &ChainModel, walk: &WalkArgs) -> Result<CoverageCurve> {
    if walk.uavs == 1 {
        Ok(expected_coverage_exact(m, walk.steps))
    } else {
        expected_coverage_multi(m, walk.steps, walk.uavs)
    }
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

#[derive(Serialize)]
struct CoverageJson<'a> {
    exact: &'a CoverageCurve,
    #[serde(skip_serializing_if = "Option::is_none")]
    naive: Option<&'a CoverageCurve>,
}

#[derive(Serialize)]
struct SuccessiveJson {
    state: usize,
    time: usize,
    verdict: Verdict,
}

/// Runs the command and returns the rendered artifact.
pub fn render(cli: &Cli) -> Result<String> {
    let threads = match cli.threads {
        Some(0) => return Err(Error::param("--threads", "must be at least 1")),
        Some(n) => n,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::param("--threads", e.to_string()))?;
    pool.install(|| render_in_pool(cli))
}

fn render_in_pool(cli: &Cli) -> Result<String> {
    let fmt = cli.format;
    match &cli.command {
        Command::Matrix { grid, absorb } => {
            let spec = grid.spec()?;
            let p = crate::chain::build_chain(&spec);
            let p = match absorb {
                Some(r) => crate::chain::make_absorbing(&p, *r)?,
                None => p,
            };
            match fmt {
                Format::Csv => Ok(io::matrix_to_csv(&p)),
                Format::Json => json(&io::MatrixJson::from(&p)),
            }
        }
        Command::Coverage {
            grid,
            start,
            walk,
            naive,
        } => {
            check_uavs(walk.uavs)?;
            let m = model(grid, start)?;
            let exact = exact_curve(&m, walk)?;
            let naive = if *naive {
                Some(expected_coverage_naive_multi(&m, walk.steps, walk.uavs)?)
            } else {
                None
            };
            match (fmt, &naive) {
                (Format::Csv, None) => Ok(io::curve_table(&exact).to_csv()),
                (Format::Csv, Some(nv)) => Ok(io::exact_naive_table(&exact, nv).to_csv()),
                (Format::Json, nv) => json(&CoverageJson {
                    exact: &exact,
                    naive: nv.as_ref(),
                }),
            }
        }
        Command::Simulate {
            grid,
            start,
            walk,
            mc,
        } => {
            check_uavs(walk.uavs)?;
            check_replications(mc.replications)?;
            let m = model(grid, start)?;
            let sim = simulate_coverage(&SimConfig::new(&m, walk.steps, mc.replications, mc.seed).uavs(walk.uavs))?;
            match fmt {
                Format::Csv => Ok(io::sim_table(&sim).to_csv()),
                Format::Json => json(&sim),
            }
        }
        Command::Compare {
            grid,
            start,
            walk,
            mc,
        } => {
            check_uavs(walk.uavs)?;
            check_replications(mc.replications)?;
            let m = model(grid, start)?;
            let cmp = compare(&m, walk.steps, walk.uavs, mc.replications, mc.seed)?;
            match fmt {
                Format::Csv => Ok(cmp.to_csv()),
                Format::Json => json(&cmp),
            }
        }
        Command::Dependence {
            grid,
            start,
            cell,
            time,
            successive,
        } => {
            let m = model(grid, start)?;
            let z = m.spec().index_of(*cell)?;
            if *successive {
                let verdict = check_successive_dependence(&m, z, *time)?;
                let out = SuccessiveJson {
                    state: z,
                    time: *time,
                    verdict,
                };
                match fmt {
                    Format::Csv => Ok(format!(
                        "state,time,verdict\n{},{},{}\n",
                        z,
                        time,
                        serde_json::to_value(verdict)?.as_str().unwrap_or_default()
                    )),
                    Format::Json => json(&out),
                }
            } else {
                let report = check_two_step_dependence(&m, z, *time)?;
                match fmt {
                    Format::Csv => Ok(io::dependence_to_csv(&report)),
                    Format::Json => json(&report),
                }
            }
        }
    }
}

/// Exact, naive and simulated curves for `k` agents.
pub fn compare(m: &ChainModel, n_max: usize, k: u32, replications: u64, seed: u64) -> Result<Comparison> {
    let exact = expected_coverage_multi(m, n_max, k)?;
    let naive = expected_coverage_naive_multi(m, n_max, k)?;
    let sim = simulate_coverage(&SimConfig::new(m, n_max, replications, seed).uavs(k))?;
    Ok(Comparison::new(exact, naive, sim))
}

/// Runs the command and writes its output to `--output` or standard output.
pub fn execute(cli: &Cli) -> Result<()> {
    let text = render(cli)?;
    match &cli.output {
        Some(path) => std::fs::write(path, text)?,
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}
