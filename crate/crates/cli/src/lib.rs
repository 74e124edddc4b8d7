//! `revan` — degree- and Revan-degree-based topological indices on random
//! graph ensembles: single-graph reports, seeded parameter sweeps to CSV,
//! scaling-collapse checks, and closed-form dense-regime predictions.

use clap::{Parser, Subcommand};
use revan_core::Model;
use std::fmt;
use std::path::PathBuf;

pub mod commands;
pub mod edgelist;
pub mod grid;
pub mod run;
pub mod sweep;

#[derive(Debug)]
pub enum CliError {
    /// Invalid invocation or parameters → exit 2.
    Usage(String),
    /// Malformed input file → exit 3.
    Format(String),
    /// Deviations exceeded the configured tolerance → exit 1.
    ToleranceExceeded(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::ToleranceExceeded(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Format(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Format(m) | CliError::ToleranceExceeded(m) => {
                f.write_str(m)
            }
        }
    }
}

impl std::error::Error for CliError {}

fn parse_model(s: &str) -> Result<Model, String> {
    Model::from_name(s).ok_or_else(|| format!("unknown model `{s}` (expected `er` or `rg`)"))
}

#[derive(Parser)]
#[command(
    name = "revan",
    version,
    about = "Degree- and Revan-degree-based topological indices on random graph ensembles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write one random-graph realization as an edge list
    Generate {
        /// er (Erdős–Rényi) or rg (random geometric)
        #[arg(long, value_parser = parse_model)]
        model: Model,
        /// number of vertices
        #[arg(long)]
        n: usize,
        /// connection parameter: p for er, ell for rg; accepts `sqrt2`
        #[arg(long, value_parser = grid::parse_value)]
        param: f64,
        /// master seed of the ensemble
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// realization index within the ensemble
        #[arg(long, default_value_t = 0)]
        index: u64,
        /// output path (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute all sixteen indices of an edge-list graph
    Compute {
        /// edge-list file: `n m` header, then `u v` lines
        graph: PathBuf,
    },
    /// Average indices over a seeded ensemble across a parameter grid
    Ensemble {
        #[arg(long, value_parser = parse_model)]
        model: Model,
        #[arg(long)]
        n: usize,
        /// `log:start:stop:count` or comma-separated values
        #[arg(long)]
        grid: String,
        /// realizations per grid point
        #[arg(long, default_value_t = 1000)]
        realizations: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// worker threads (default: all cores)
        #[arg(long)]
        threads: Option<usize>,
        /// CSV output path (written atomically)
        #[arg(long)]
        out: PathBuf,
    },
    /// Check size-collapse of normalized sweep curves and their agreement
    /// with the closed-form dense-regime predictions
    Collapse {
        /// two or more sweep CSVs, one size per file (size collapse needs
        /// distinct n to be meaningful)
        #[arg(required = true, num_args = 2..)]
        csv: Vec<PathBuf>,
        /// comma-separated index names (sums: M1..RSO, products: Pi1..RSOPi)
        #[arg(long, default_value = "R1,R2,FR,RSO,R1Pi,R2Pi,FRPi,RSOPi")]
        index: String,
        /// dense-regime threshold on the mean degree abscissa
        #[arg(long, default_value_t = 10.0)]
        r_min: f64,
        /// worst acceptable relative deviation
        #[arg(long, default_value_t = 0.05)]
        tolerance: f64,
    },
    /// Print the dense-regime prediction of one index over an r grid
    Predict {
        /// index name, e.g. R1 or FRPi
        index: String,
        /// `log:start:stop:count` or comma-separated values
        #[arg(long, default_value = "log:1:100:13")]
        grid: String,
    },
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Generate {
            model,
            n,
            param,
            seed,
            index,
            out,
        } => commands::cmd_generate(model, n, param, seed, index, out.as_deref()),
        Command::Compute { graph } => commands::cmd_compute(&graph),
        Command::Ensemble {
            model,
            n,
            grid,
            realizations,
            seed,
            threads,
            out,
        } => commands::cmd_ensemble(
            model,
            n,
            &grid,
            realizations,
            seed,
            threads.unwrap_or_else(run::default_threads),
            &out,
        ),
        Command::Collapse {
            csv,
            index,
            r_min,
            tolerance,
        } => commands::cmd_collapse(&csv, &index, r_min, tolerance),
        Command::Predict { index, grid } => commands::cmd_predict(&index, &grid),
    }
}

/// Parse the process arguments, run the subcommand, and return the exit
/// code: 0 success, 1 tolerance failure, 2 usage, 3 input format.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
