//! Command-line front end: read, solve, optionally verify, write.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};

use crate::error::Error;
use crate::io::{
    read_csv_with, read_pgm, render_overlay, write_path, write_tables, CsvOptions, OverlaySpec,
};
use crate::matrix::CostMatrix;
use crate::oracle::brute_force_solve;
use crate::params::{SolverParams, StartMode};
use crate::solver::{solve, Solution};

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const SOLVER: i32 = 3;
    pub const DISAGREEMENT: i32 = 4;
}

/// Relative tolerance for `--verify` cost agreement.
pub const VERIFY_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// Pick by file extension, then by magic bytes.
    #[default]
    Auto,
    Csv,
    Pgm,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum StartArg {
    #[default]
    Free,
    Bottom,
}

impl From<StartArg> for StartMode {
    fn from(s: StartArg) -> Self {
        match s {
            StartArg::Free => StartMode::FreeStart,
            StartArg::Bottom => StartMode::EnforcedBottomStart,
        }
    }
}

/// Minimal-cost upward-monotone path through a cost matrix.
#[derive(Clone, Debug, Parser)]
#[command(name = "monopath", version)]
pub struct CliConfig {
    /// Input cost matrix (CSV or PGM).
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub format: InputFormat,
    /// Derivative window, in columns.
    #[arg(long, default_value_t = SolverParams::DEFAULT_W)]
    pub w: usize,
    /// Logistic decay of the derivative strength.
    #[arg(long, default_value_t = SolverParams::DEFAULT_BETA)]
    pub beta: f64,
    /// Climb penalty weight.
    #[arg(long, default_value_t = SolverParams::DEFAULT_MU)]
    pub mu: f64,
    #[arg(long, value_enum, default_value_t = StartArg::Free)]
    pub start_mode: StartArg,
    /// Min-max rescale CSV input into [0, 1].
    #[arg(long)]
    pub normalize: bool,
    /// Write the path document (JSON) here.
    #[arg(long, value_name = "FILE")]
    pub out_path: Option<PathBuf>,
    /// Write a P6 overlay image here.
    #[arg(long, value_name = "FILE")]
    pub overlay: Option<PathBuf>,
    /// Dump Q, P, D and S tables here.
    #[arg(long, value_name = "FILE")]
    pub tables: Option<PathBuf>,
    /// Cross-check against exhaustive enumeration.
    #[arg(long)]
    pub verify: bool,
    #[arg(long, conflicts_with = "verbose")]
    pub quiet: bool,
    #[arg(long)]
    pub verbose: bool,
}

impl CliConfig {
    pub fn params(&self) -> SolverParams {
        SolverParams::new(self.w, self.beta, self.mu, self.start_mode.into())
    }
}

/// Parses `args` (including the program name) and runs.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match CliConfig::try_parse_from(args) {
        Ok(config) => run(&config, out, err),
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    exit::SUCCESS
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    exit::USAGE
                }
            }
        }
    }
}

fn detect_format(path: &Path, bytes: &[u8]) -> InputFormat {
    let ext = path
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase);
    match ext.as_deref() {
        Some("csv") => InputFormat::Csv,
        Some("pgm") => InputFormat::Pgm,
        _ if bytes.starts_with(b"P2") || bytes.starts_with(b"P5") => InputFormat::Pgm,
        _ => InputFormat::Csv,
    }
}

fn load(config: &CliConfig) -> Result<CostMatrix, Error> {
    let bytes = std::fs::read(&config.input).map_err(Error::ReadFailure)?;
    let format = match config.format {
        InputFormat::Auto => detect_format(&config.input, &bytes),
        f => f,
    };
    match format {
        InputFormat::Pgm => read_pgm(bytes.as_slice()),
        _ => read_csv_with(
            bytes.as_slice(),
            CsvOptions {
                normalize: config.normalize,
            },
        ),
    }
}

fn create(path: &Path) -> Result<BufWriter<File>, Error> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(Error::WriteFailure)
}

fn write_outputs(config: &CliConfig, c: &CostMatrix, sol: &Solution) -> Result<(), Error> {
    if let Some(path) = &config.out_path {
        write_path(&sol.result, c.rows(), &config.params(), create(path)?)?;
    }
    if let Some(path) = &config.overlay {
        render_overlay(&OverlaySpec::new(c, &sol.result.path), create(path)?)?;
    }
    if let Some(path) = &config.tables {
        write_tables(&sol.tables, &sol.derivative, &sol.strength, create(path)?)?;
    }
    Ok(())
}

fn extrema(values: &[f64]) -> (f64, f64) {
    values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        })
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Relative agreement used by `--verify`.
pub fn costs_agree(a: f64, b: f64, rel: f64) -> bool {
    a == b || (a - b).abs() <= rel * a.abs().max(b.abs())
}

/// Runs one invocation and returns the process exit code.
pub fn run(config: &CliConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let params = config.params();
    if let Err(e) = params.check() {
        let _ = writeln!(err, "error: {e}");
        return exit::USAGE;
    }
    let c = match load(config) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", config.input.display());
            return exit::INPUT;
        }
    };
    let sol = match solve(&c, &params) {
        Ok(sol) => sol,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit::SOLVER;
        }
    };

    if config.verbose {
        let (dlo, dhi) = extrema(sol.derivative.as_slice());
        let (slo, shi) = extrema(sol.strength.as_slice());
        let _ = writeln!(out, "matrix: {}x{}", c.rows(), c.cols());
        let _ = writeln!(
            out,
            "params: w={} beta={} mu={} start_mode={}",
            params.w,
            params.beta,
            params.mu,
            params.start_mode.as_str()
        );
        let _ = writeln!(out, "derivative: min={dlo} max={dhi}");
        let _ = writeln!(out, "strength: min={slo} max={shi}");
        let _ = writeln!(out, "up-moves: {}", join(&sol.result.up_moves()));
    }
    if !config.quiet {
        let _ = writeln!(out, "path: {}", join(&sol.result.path));
        let _ = writeln!(out, "total_cost: {}", sol.result.total_cost);
    }

    if let Err(e) = write_outputs(config, &c, &sol) {
        let _ = writeln!(err, "error: {e}");
        return exit::INPUT;
    }

    if config.verify {
        let oracle = match brute_force_solve(&c, &params) {
            Ok(r) => r,
            Err(e) => {
                let _ = writeln!(err, "error: verification failed: {e}");
                return exit::SOLVER;
            }
        };
        if !costs_agree(sol.result.total_cost, oracle.total_cost, VERIFY_TOLERANCE) {
            let _ = writeln!(
                err,
                "error: oracle disagreement: solver cost {} vs enumerated minimum {}",
                sol.result.total_cost, oracle.total_cost
            );
            return exit::DISAGREEMENT;
        }
        if !config.quiet {
            let _ = writeln!(out, "verify: agree (oracle cost {})", oracle.total_cost);
        }
    }
    exit::SUCCESS
}
