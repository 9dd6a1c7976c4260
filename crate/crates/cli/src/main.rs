//! `rainbow`: colour, verify, solve exactly, generate and sweep graphs from
//! the command line. Exit codes are part of the interface; see the README.

mod commands;
mod dot;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rainbow_core::Execution;

#[derive(Parser, Debug)]
#[command(name = "rainbow", version, about = "Rainbow-connecting colourings of 2-connected graphs")]
struct Cli {
    /// Run every data-parallel loop on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Colour a 2-connected graph with at most ceil(n/2) colours and verify it.
    Colour(ColourArgs),
    /// Check a colouring file against a graph.
    Verify(VerifyArgs),
    /// Compute the rainbow connection number by exhaustive search.
    Exact(ExactArgs),
    /// Generate graphs.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Colour and verify many graphs, one CSV row each.
    Sweep(SweepArgs),
}

#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    /// Graph file, or `-` for stdin.
    #[arg(long, short, default_value = "-")]
    pub input: String,
    #[arg(long, value_enum, default_value_t = GraphFormat::Auto)]
    pub format: GraphFormat,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    /// graph6 if the input is a single token, edge list otherwise.
    Auto,
    Edgelist,
    Graph6,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Emit {
    Json,
    Dot,
    Trace,
}

#[derive(Args, Debug)]
pub struct ColourArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = Emit::Json)]
    pub emit: Emit,
    /// Artefact destination; stdout when absent.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Colouring JSON as written by `colour`.
    #[arg(long, short)]
    pub colouring: PathBuf,
    /// Include a witness path for every pair in the report.
    #[arg(long)]
    pub witnesses: bool,
    /// Report destination; stdout when absent.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ExactArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Colourings to test before giving up with bounds.
    #[arg(long, default_value_t = 10_000_000)]
    pub budget: u64,
    /// Witness colouring destination; stdout when absent.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum GenCommand {
    /// Two end vertices joined through ell - 1 layers of k vertices.
    Family {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
        #[command(flatten)]
        out: GenOutput,
    },
    /// A seeded random 2-connected graph built from a cycle and ears.
    Random {
        #[arg(long)]
        n: usize,
        /// Edges beyond n.
        #[arg(long, default_value_t = 2)]
        extra: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: GenOutput,
    },
    /// Every 2-connected graph on n vertices, one graph6 line each.
    TwoConnected {
        #[arg(long)]
        n: usize,
        /// All labelled graphs instead of one per isomorphism class.
        #[arg(long)]
        labelled: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutFormat {
    Edgelist,
    Graph6,
    Dot,
}

#[derive(Args, Debug)]
pub struct GenOutput {
    #[arg(long, value_enum, default_value_t = OutFormat::Edgelist)]
    pub format: OutFormat,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// graph6 lines to sweep instead of an enumeration.
    #[arg(long, short)]
    pub input: Option<String>,
    #[arg(long, default_value_t = 3)]
    pub n_min: usize,
    /// Largest enumerated order; 0 skips the enumeration.
    #[arg(long, default_value_t = 6)]
    pub n_max: usize,
    /// Enumerate labelled graphs instead of one per isomorphism class.
    #[arg(long)]
    pub labelled: bool,
    /// Seeded random instances to add.
    #[arg(long, default_value_t = 0)]
    pub random: usize,
    /// Order of the random instances.
    #[arg(long, default_value_t = 12)]
    pub random_n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Cross-check with the exact oracle up to this many edges.
    #[arg(long, default_value_t = 10)]
    pub exact_max_edges: usize,
    /// Colourings the oracle may test per graph.
    #[arg(long, default_value_t = 2_000_000)]
    pub budget: u64,
    /// CSV destination; stdout when absent.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential { Execution::Sequential } else { Execution::default() };
    let code = match cli.command {
        Command::Colour(a) => commands::colour(&a, exec),
        Command::Verify(a) => commands::verify(&a, exec),
        Command::Exact(a) => commands::exact(&a, exec),
        Command::Gen(g) => commands::gen(&g, exec),
        Command::Sweep(a) => commands::sweep(&a, exec),
    };
    ExitCode::from(code)
}
