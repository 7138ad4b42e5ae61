//! `addspan` command-line tool.
//!
//! Exit codes: 0 on success, 1 when a requested verification fails (the
//! report or stats file is still written), 2 on usage or I/O errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Seed used by `gen` and `bench` when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 20_240_101;

#[derive(Parser, Debug)]
#[command(name = "addspan", version, about = "Additive spanners and approximate distance oracles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph in edge-list format.
    Gen(GenArgs),
    /// Build an additive 2-spanner.
    Spanner2(SpannerArgs),
    /// Build an additive 8-spanner.
    Spanner8(Spanner8Args),
    /// Check that a spanner has additive stretch at most k.
    Verify(VerifyArgs),
    /// Build, query or dump a (2,1) distance oracle.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Time both spanner constructions over a range of sizes.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Path,
    Cycle,
    Complete,
    Star,
    Grid,
    Gnm,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Node count (all families except grid).
    #[arg(long)]
    n: Option<usize>,
    /// Edge count (gnm only).
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long)]
    cols: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args, Debug)]
struct SpannerArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
    /// Stats JSON destination.
    #[arg(long)]
    stats: Option<PathBuf>,
    /// Override the clustering threshold.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    t: Option<u64>,
    /// Check stretch and edge budget; exit 1 on failure.
    #[arg(long)]
    verify: bool,
}

#[derive(Args, Debug)]
struct Spanner8Args {
    #[command(flatten)]
    common: SpannerArgs,
    /// Write every path-buying event as JSON lines.
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    spanner: PathBuf,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Build an oracle file from a graph.
    Build {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        t: Option<u64>,
    },
    /// Answer "u v" queries, one per line; prints "u v est".
    Query {
        #[arg(long)]
        oracle: PathBuf,
        #[arg(long)]
        pairs: PathBuf,
        /// Defaults to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the full estimate matrix, one row per line.
    Apasp {
        #[arg(long)]
        oracle: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// Only gnm is supported.
    #[arg(long, value_enum, default_value = "gnm")]
    family: FamilyArg,
    /// Comma-separated node counts.
    #[arg(long, value_delimiter = ',', default_value = "200,400,800,1600")]
    sizes: Vec<usize>,
    /// Edges as a function of n.
    #[arg(long, value_enum, default_value = "dense")]
    density: commands::Density,
    /// Timed repetitions per size; the fastest is kept.
    #[arg(long, default_value_t = 3)]
    repeats: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => commands::gen(a),
        Command::Spanner2(a) => commands::spanner2(a),
        Command::Spanner8(a) => commands::spanner8(a),
        Command::Verify(a) => commands::verify(a),
        Command::Oracle(c) => commands::oracle(c),
        Command::Bench(a) => commands::bench(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
