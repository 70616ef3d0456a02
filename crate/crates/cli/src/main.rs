//! Command-line front end: compatibility checks, channel reports, tradeoff
//! scans, region sampling and the verification suites.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sharpdist::tradeoffs::TradeoffKind;
use sharpdist::verify::Suite;

mod commands;
mod format;
mod output;
mod parse;

#[derive(Debug)]
pub enum CliError {
    /// Malformed arguments.
    Usage(String),
    /// Well-formed arguments describing an invalid object.
    Invalid(String),
    Io(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Usage(m) => write!(f, "usage error: {m}"),
            Self::Invalid(m) => write!(f, "invalid input: {m}"),
            Self::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<sharpdist::Error> for CliError {
    fn from(e: sharpdist::Error) -> Self {
        Self::Invalid(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "sharpdist", version, about = "Sharpness and disturbance tradeoffs for qubit channels and measurements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Emit {
    /// Write data here; a `<stem>.manifest.json` is written alongside.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Args)]
pub struct ChannelArgs {
    /// Pauli probabilities p0,p1,p2,p3.
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<String>,
    /// Bloch matrix of a unital channel, nine entries row by row.
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Test whether a channel and an unbiased binary measurement are compatible.
    Check {
        #[command(flatten)]
        channel: ChannelArgs,
        /// Measurement sharpness in [0, 1].
        #[arg(long)]
        s: f64,
        /// Measurement direction x,y,z.
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        #[command(flatten)]
        emit: Emit,
    },
    /// Fidelity, quantumness, LQU and P-values of a channel.
    Info {
        #[command(flatten)]
        channel: ChannelArgs,
        #[command(flatten)]
        emit: Emit,
    },
    /// Best achievable measure versus sharpness: closed form against grid search.
    Scan {
        #[arg(value_enum)]
        kind: ScanKind,
        /// Number of sharpness values spread evenly over [0, 1].
        #[arg(long, default_value_t = 11)]
        s_steps: usize,
        /// Simplex subdivisions per edge.
        #[arg(long, default_value_t = 60)]
        grid: usize,
        /// Measurement directions searched.
        #[arg(long, default_value_t = 3)]
        directions: usize,
        /// Refinement passes around the best grid point.
        #[arg(long, default_value_t = 2)]
        refine: usize,
        /// Search the plain grid only, without polytope vertices and equal-P channels.
        #[arg(long)]
        no_inject: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        emit: Emit,
    },
    /// Pauli simplex grid points compatible with a fixed measurement.
    Region {
        #[arg(long)]
        s: f64,
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        #[arg(long, default_value_t = 20)]
        grid: usize,
        /// Emit every grid point, not only the compatible ones.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        emit: Emit,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[command(flatten)]
        emit: Emit,
    },
    /// Seeded random draws: Haar states or compatible channel-measurement pairs.
    Sample {
        #[arg(value_enum)]
        what: SampleKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Fix the measurement sharpness (channels only; needs --n).
        #[arg(long)]
        s: Option<f64>,
        /// Fix the measurement direction (channels only; needs --s).
        #[arg(long, allow_hyphen_values = true)]
        n: Option<String>,
        #[command(flatten)]
        emit: Emit,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ScanKind {
    Fidelity,
    Quantumness,
    Lqu,
}

impl From<ScanKind> for TradeoffKind {
    fn from(k: ScanKind) -> Self {
        match k {
            ScanKind::Fidelity => Self::Fidelity,
            ScanKind::Quantumness => Self::Quantumness,
            ScanKind::Lqu => Self::Lqu,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SampleKind {
    States,
    Channels,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse::<Suite>()
        .map_err(|_| format!("unknown suite '{s}' (expected all, identities, theorems or oracles)"))
}

/// Exit status of a command that ran to completion.
pub enum Status {
    Ok,
    Violation,
}

fn run(cli: Cli) -> Result<Status, CliError> {
    match cli.command {
        Command::Check { channel, s, n, emit } => commands::check(&channel, s, &n, &emit),
        Command::Info { channel, emit } => commands::info(&channel, &emit),
        Command::Scan { kind, s_steps, grid, directions, refine, no_inject, seed, emit } => {
            let cfg = sharpdist::tradeoffs::SearchConfig {
                simplex_grid: grid,
                direction_grid: directions,
                refine_steps: refine,
                inject_candidates: !no_inject,
            };
            commands::scan(kind.into(), s_steps, cfg, seed, &emit)
        }
        Command::Region { s, n, grid, all, emit } => commands::region(s, &n, grid, all, &emit),
        Command::Verify { suite, seed, samples, emit } => commands::verify(suite, seed, samples, &emit),
        Command::Sample { what, seed, samples, s, n, emit } => {
            commands::sample(what, seed, samples, s, n.as_deref(), &emit)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Violation) => ExitCode::from(1),
        Err(e) => {
            eprintln!("sharpdist: {e}");
            ExitCode::from(2)
        }
    }
}
