//! `ketsim` command-line front end.

mod dj;
mod gates;
mod report;
mod state;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "ketsim",
    version,
    about = "Statevector simulator for bra-ket states and Deutsch-Jozsa"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run Deutsch-Jozsa on an oracle and compare with the classical baselines.
    Dj(DjArgs),
    /// Parse a state, optionally apply gates, then measure or test separability.
    State(StateArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args)]
pub struct DjArgs {
    /// Number of input bits (1..=12).
    #[arg(long)]
    pub n: usize,
    /// constant:0, constant:1, balanced:parity, balanced:bit:<i>,
    /// balanced:random:<seed>, or table:<bits>.
    #[arg(long)]
    pub oracle: String,
    /// Measurement shots to sample from the exact distribution (0 = none).
    #[arg(long, default_value_t = 0)]
    pub shots: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Queries allowed to the probabilistic classical baseline.
    #[arg(long, default_value_t = 10)]
    pub k: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args)]
pub struct StateArgs {
    /// Dirac expression, e.g. "i*(1/sqrt(2))|01> + (1/sqrt(2))|11>".
    #[arg(required_unless_present = "file", conflicts_with = "file")]
    pub expr: Option<String>,
    /// Read one expression per line ('#' starts a comment).
    #[arg(long)]
    pub file: Option<std::path::PathBuf>,
    /// Register width; needed for decimal labels such as |5>.
    #[arg(long)]
    pub qubits: Option<usize>,
    /// Rescale the expression to unit norm instead of rejecting it.
    #[arg(long)]
    pub normalize: bool,
    /// Comma-separated gates applied left to right: i, x, h, cnot, h@q, x@q, i@q, cnot@c,t.
    #[arg(long)]
    pub apply: Option<String>,
    /// Print the exact outcome distribution.
    #[arg(long)]
    pub measure: bool,
    /// Measure only the first K qubits.
    #[arg(long, value_name = "K")]
    pub prefix: Option<usize>,
    /// Test whether the state factors into single-qubit states.
    #[arg(long)]
    pub separable: bool,
    #[arg(long, default_value_t = 0)]
    pub shots: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Digits after the decimal point when printing amplitudes.
    #[arg(long, default_value_t = 10)]
    pub precision: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// Failure with the process exit code it maps to.
pub enum Failure {
    Usage(String),
    PromiseViolation(String),
}

impl From<ketsim::Error> for Failure {
    fn from(e: ketsim::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Dj(args) => dj::run(&args),
        Command::State(args) => state::run(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::PromiseViolation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
