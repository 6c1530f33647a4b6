//! `sln` — command-line front end of the workbench: polynomial invariants
//! of braid closures, combinatorial tables, transport experiments with CSV
//! traces and JSON summaries, and the acceptance-check suites.
//!
//! Every command is deterministic given its parameters and `--seed`;
//! floating-point values in JSON summaries are rounded to 12 significant
//! digits so reruns produce byte-identical output.
//!
//! Exit codes: 0 success, 1 check failure, 2 usage error, 3 numerical
//! non-convergence.

mod config;
mod poly;
mod report;
mod tables;
mod transport;
mod verify;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::config::{OutputFormat, Settings};

#[derive(Parser)]
#[command(
    name = "sln",
    version,
    about = "Workbench for the quantum sl(n) link polynomial, its braid and \
             partition combinatorics, the transport experiments of the local \
             model, and the graded invariant of the worked examples."
)]
struct Cli {
    /// JSON file with default parameter values (explicit flags win)
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Directory for report files (default: $SLN_OUT_DIR when set)
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,

    /// Summary output format
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,

    /// Root seed for every random stream
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the polynomial invariant of a braid closure and its value at q = -1
    Poly {
        /// Braid word, e.g. B2:-1,-1,-1 (`Bm:` is the trivial braid on m strands)
        word: String,
        /// Rank parameter n >= 1 (default 2)
        n: Option<usize>,
    },
    /// Tabulate tableau counts, bounded-subsequence counts, and flag-variety
    /// dimensions as CSV with an `equal` column
    Tables {
        /// Largest block count m in the sweep (default 5)
        #[arg(long)]
        m: Option<usize>,
        /// Largest rank n in the sweep (default 4)
        #[arg(long)]
        n: Option<usize>,
    },
    /// Transport experiments: CSV traces plus a JSON summary with pass/fail
    /// per invariant
    Transport {
        #[command(subcommand)]
        mode: TransportMode,
    },
    /// Run acceptance-check suites and exit nonzero on any failure
    Verify {
        /// Suite name (default: all)
        suite: Option<String>,
        /// Reduced trial counts for a fast smoke run
        #[arg(long)]
        quick: bool,
        /// Override the fuzz-trial count of the braid suites
        #[arg(long)]
        trials: Option<usize>,
        /// Override the sample count of the gradient scan
        #[arg(long)]
        samples: Option<usize>,
        /// Comma-separated ranks for the conjecture-euler suite, e.g. 2,3,4
        #[arg(long, value_delimiter = ',')]
        n: Option<Vec<usize>>,
    },
}

#[derive(Subcommand)]
enum TransportMode {
    /// Radial transport of the diagonal model family: the state over t must
    /// land on the model point over 0.1 t, cycle points must contract, and
    /// the off-family control must not
    Rex {
        /// Matrix size n >= 2 (default 3)
        #[arg(long)]
        n: Option<usize>,
        /// Start parameter t != 0 (default 0.5); the path ends at 0.1 t
        #[arg(long)]
        t: Option<f64>,
        /// Integration steps (default 200)
        #[arg(long)]
        steps: Option<usize>,
        /// Accepted endpoint deviation (default 1e-6)
        #[arg(long)]
        tol: Option<f64>,
    },
    /// The planar trefoil arcs of the reduced family: crossing count, fiber
    /// classification, and measured fiber dimensions
    Trefoil {
        /// Ambient rank n >= 2 (default 3)
        #[arg(long)]
        n: Option<usize>,
        /// Marked eigenvalue d > 0 (default 0.3)
        #[arg(long)]
        d: Option<f64>,
        /// Quadratic invariant, 0 < z < ((n+1)d/2)^2 (default 0.01)
        #[arg(long)]
        z: Option<f64>,
        /// Sample count along the bent arc (default 101)
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Monte-Carlo lower bound for the gradient of the defining function
    /// away from its critical values
    Gradient {
        /// Ambient rank n >= 2 (default 3)
        #[arg(long)]
        n: Option<usize>,
        /// Marked eigenvalue d > 0 (default 0.1)
        #[arg(long)]
        d: Option<f64>,
        /// Sample count (default 1000; the scan also reruns with 2x)
        #[arg(long)]
        samples: Option<usize>,
    },
}

/// A command failure carrying its process exit code.
pub enum Failure {
    /// Exit 1: a checked quantity missed its target.
    Check(String),
    /// Exit 2: bad flags, config file, or input text.
    Usage(String),
    /// Exit 3: an engine run failed to converge.
    Numerical(String),
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Numerical(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Check(m) | Failure::Usage(m) | Failure::Numerical(m) => m,
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let settings = Settings::resolve(cli.config.as_deref(), cli.out, cli.format, cli.seed)
        .unwrap_or_else(|f| fail(f));
    let result = match cli.command {
        Command::Poly { word, n } => poly::run(&word, n, &settings),
        Command::Tables { m, n } => tables::run(m, n, &settings),
        Command::Transport { mode } => transport::run(&mode, &settings),
        Command::Verify {
            suite,
            quick,
            trials,
            samples,
            n,
        } => verify::run(suite.as_deref(), quick, trials, samples, n, &settings),
    };
    if let Err(f) = result {
        fail(f);
    }
}

fn fail(f: Failure) -> ! {
    eprintln!("error: {}", f.message());
    std::process::exit(f.exit_code());
}
