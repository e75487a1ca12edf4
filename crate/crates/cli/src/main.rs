//! `qwalk`: quantum-walk analyses on small graphs with JSON reports.

mod commands;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qwalk::Tolerances;

#[derive(Debug, Parser)]
#[command(name = "qwalk", version, about = "Continuous-time quantum walk analyses with JSON reports")]
pub struct Cli {
    #[command(flatten)]
    pub tol: TolFlags,
    #[command(subcommand)]
    pub command: Cmd,
}

/// Numeric thresholds; the defaults match `Tolerances::default()`.
#[derive(Debug, Clone, Args)]
pub struct TolFlags {
    /// Eigenvalue grouping gap [default: 1e-9 * max(1, ||A||_inf)]
    #[arg(long, global = true)]
    pub tol_grouping: Option<f64>,
    /// Projector norm that puts an eigenvalue in a vertex's support
    #[arg(long, global = true, default_value_t = 1e-7)]
    pub tol_support: f64,
    /// Allowed mismatch in E_r|a> = sigma E_r|b>
    #[arg(long, global = true, default_value_t = 1e-7)]
    pub tol_sigma: f64,
    /// Rounding tolerance when recovering integers
    #[arg(long, global = true, default_value_t = 1e-6)]
    pub tol_integrality: f64,
    /// Allowed 1 - fidelity at a certified transfer time
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol_fidelity: f64,
}

impl TolFlags {
    pub fn tolerances(&self) -> Tolerances {
        Tolerances {
            grouping: self.tol_grouping,
            support: self.tol_support,
            sigma: self.tol_sigma,
            integrality: self.tol_integrality,
            fidelity: self.tol_fidelity,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Exact characteristic polynomial, optionally of vertex-deleted subgraphs
    Charpoly {
        /// Graph file (edge list or graph6), `-` for stdin
        file: String,
        /// Vertices to delete, comma separated; repeat for several deletions
        #[arg(long)]
        deleted: Vec<String>,
    },
    /// Eigenvalues with multiplicities
    Spectrum {
        file: String,
        /// Grouping gap for merging eigenvalues
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Cospectrality of two vertices
    Cospectral {
        file: String,
        a: usize,
        b: usize,
        /// Also decide strong cospectrality
        #[arg(long)]
        strong: bool,
    },
    /// Perfect state transfer certificate with fidelity confirmation
    Pst { file: String, a: usize, b: usize },
    /// Join two marked graphs by a path and analyse the new pair
    Compose {
        #[arg(long)]
        y1: String,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        y2: String,
        #[arg(long)]
        b: usize,
        /// Vertices on the joining path, endpoints included
        #[arg(long)]
        bridge: usize,
    },
    /// Exhaustive transfer search across a P2 or P3 bridge
    Search {
        /// 2 for an edge, 3 for a path through one new vertex
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        bridge: u8,
        /// Largest order of each side; required unless reading graph6 from stdin
        #[arg(long)]
        max_n: Option<usize>,
        /// Read the side graphs as graph6 lines from stdin
        #[arg(long)]
        stdin_graph6: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Run a randomized invariant suite
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = qwalk::verify::suites::DEFAULT_SEED)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(outcome) => {
            println!("{}", outcome.json);
            eprintln!("{}", outcome.summary);
            ExitCode::from(if outcome.expected { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
