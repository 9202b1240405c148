//! `rtv`: batch front end for the Voronoi workbench.
//!
//! Exit codes: 0 success, 1 domain failure or a failed verification, 2 usage
//! error.

mod commands;
mod manifest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "rtv",
    version,
    about = "Round-trip and classic Voronoi diagrams on weighted networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Label every vertex with its diagram region.
    Voronoi(VoronoiArgs),
    /// Candidate-pair count, doubling densities and search counters.
    Density(DensityArgs),
    /// Write a synthetic graph and site file.
    Gen(GenArgs),
    /// Cross-check all round-trip algorithms against the oracle.
    Verify(VerifyArgs),
    /// Density reports over a ladder of generated instances, as CSV.
    Sweep(SweepArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Mode {
    Single,
    Sum,
    Orderc,
    Roundtrip,
    TwoColor,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum AlgorithmArg {
    Brute,
    Revised,
    Dynamic,
}

#[derive(Args, Serialize)]
struct VoronoiArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    sites: PathBuf,
    #[arg(long, value_enum)]
    mode: Mode,
    /// Number of nearest sites per vertex (orderc only).
    #[arg(long)]
    order: Option<usize>,
    /// Round-trip algorithm [default: dynamic].
    #[arg(long, value_enum)]
    algorithm: Option<AlgorithmArg>,
    /// Visit budget B for the revised algorithm [default: 8].
    #[arg(long)]
    bound: Option<usize>,
    #[arg(long)]
    out: PathBuf,
    /// Stats JSON destination.
    #[arg(long)]
    stats: Option<PathBuf>,
    /// Search-event TSV destination.
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Args, Serialize)]
struct DensityArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    sites: PathBuf,
    /// Cross-color pairs and radii; needs a colored site file.
    #[arg(long)]
    two_color: bool,
    /// Visit budget of the revised run that measures A.
    #[arg(long, default_value_t = 8)]
    bound: usize,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum FamilyArg {
    Grid,
    Rgg,
    Path,
    Star,
}

#[derive(Args, Serialize)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// grid: ROWS,COLS; rgg: N,RADIUS; path: N; star: LEAVES.
    #[arg(long)]
    params: String,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    two_color: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// `unit` or `uniform:LO,HI` (decimal); rgg always uses edge lengths.
    #[arg(long, default_value = "unit")]
    weights: String,
    /// Writes PREFIX.gr and PREFIX.sites.
    #[arg(long)]
    out_prefix: PathBuf,
}

#[derive(Args, Serialize)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1000)]
    instances: u64,
    #[arg(long, default_value_t = 200)]
    max_n: usize,
    #[arg(long, default_value_t = 20)]
    max_k: usize,
    /// Comma-separated: brute, revised(B), revised(k), dynamic.
    #[arg(
        long,
        default_value = "brute,revised(0),revised(2),revised(4),revised(k),dynamic"
    )]
    variants: String,
    /// First instance seed; instances use consecutive seeds.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    two_color: bool,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Also write the report here (plus a manifest alongside).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Adds a variant with a deliberately wrong tie rule.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Args, Serialize)]
struct SweepArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Comma-separated sizes (star: leaf counts).
    #[arg(long)]
    ladder: String,
    /// `sqrt` or `fixed:K`.
    #[arg(long, default_value = "sqrt")]
    k_rule: String,
    #[arg(long, default_value_t = 10)]
    seeds: u64,
    #[arg(long, default_value_t = 0)]
    first_seed: u64,
    #[arg(long)]
    two_color: bool,
    #[arg(long, default_value_t = 8)]
    bound: usize,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    out: PathBuf,
}

pub enum CliError {
    Usage(String),
    Failure(String),
}

impl From<rtv_core::Error> for CliError {
    fn from(e: rtv_core::Error) -> Self {
        CliError::Failure(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Voronoi(a) => commands::voronoi(&a),
        Command::Density(a) => commands::density(&a),
        Command::Gen(a) => commands::gen(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Sweep(a) => commands::sweep(&a),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => Cli::command()
            .error(ErrorKind::ArgumentConflict, msg)
            .exit(),
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
