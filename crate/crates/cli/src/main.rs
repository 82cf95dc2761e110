//! Command-line front end tying generators, growth, spectral, bounds, and
//! Hall–Knuth probing into reproducible experiment pipelines emitting CSV.
//!
//! Exit codes: 0 success, 1 usage, 2 input/parse, 3 convergence,
//! 4 construction failure.

mod commands;
mod output;

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use expander_growth::Error;

/// How λ is chosen for vertex-count bounds.
#[derive(Debug, Clone)]
pub enum LambdaPolicy {
    /// Eigensolve on the input graph (regular graphs).
    Auto,
    /// The Ramanujan bound 2√(d−1), with d̄ in place of d when not regular.
    Ramanujan,
    Explicit(f64),
}

impl FromStr for LambdaPolicy {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "auto" => Ok(LambdaPolicy::Auto),
            "ramanujan" => Ok(LambdaPolicy::Ramanujan),
            other => other
                .parse::<f64>()
                .map(LambdaPolicy::Explicit)
                .map_err(|_| format!("expected auto, ramanujan, or a number, got {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum StartArg {
    Random,
    Vertex(usize),
}

impl FromStr for StartArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "random" {
            return Ok(StartArg::Random);
        }
        s.parse::<usize>()
            .map(StartArg::Vertex)
            .map_err(|_| format!("expected `random` or a vertex index, got {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
pub enum BoundsCurve {
    /// Structural queue lower bound.
    Prop1,
    /// Expected queue lower bound β(π, d, λ).
    Beta,
    /// Asymptotic queue density on G(n, d/n).
    Er,
    /// Giant-component density δ₀(d) only.
    Delta0,
}

#[derive(Debug, Subcommand)]
pub enum GenFamily {
    /// LPS Ramanujan Cayley graph on PSL/PGL(2, Z/qZ).
    Lps {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
    },
    /// G(n, p): each pair independently with probability p.
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        prob: f64,
    },
    /// G(n, m): uniform m-subset of pairs.
    Gnm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        edges: usize,
    },
    /// Flip graph of the convex k-gon.
    Polygon {
        #[arg(long)]
        k: usize,
        /// Also write the node → triangulation table here.
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Flip graph on orbits of triangulations under a symmetry group.
    PolygonQuotient {
        #[arg(long)]
        k: usize,
        /// cyclic | dihedral
        #[arg(long, default_value = "cyclic")]
        group: String,
    },
}

#[derive(Debug, Args)]
pub struct GrowArgs {
    /// Edge-list file to grow through.
    #[arg(long)]
    pub input: PathBuf,
    /// Start vertex: `random` or an index.
    #[arg(long, default_value = "random")]
    pub start: StartArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub snapshot_every: usize,
    #[arg(long, default_value_t = 1000)]
    pub estimate_every: usize,
    /// Queue vertices sampled per e(U,W) estimate; 0 = exact census.
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    /// auto | ramanujan | <value>
    #[arg(long, default_value = "ramanujan")]
    pub lambda: LambdaPolicy,
    /// Keep emitting frozen snapshots through step n after exhaustion.
    #[arg(long)]
    pub padded: bool,
    /// Trajectory CSV path.
    #[arg(long)]
    pub out: PathBuf,
    /// Vertex-count bound CSV path (estimates are skipped if absent).
    #[arg(long)]
    pub bounds_out: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    #[arg(long, default_value_t = 100_000)]
    pub max_iter: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a graph and write it as an edge list.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
        #[arg(long, global = true, default_value_t = 0)]
        seed: u64,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Degree statistics, extreme eigenvalues, and the Ramanujan flag.
    Spectral {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long, default_value_t = 100_000)]
        max_iter: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the random growth process, recording the trajectory and
    /// vertex-count bounds.
    Grow(GrowArgs),
    /// Emit a bound curve on a uniform grid over [0, 1].
    Bounds {
        #[arg(long, value_enum)]
        curve: BoundsCurve,
        #[arg(long)]
        d: f64,
        /// ramanujan | <value>
        #[arg(long, default_value = "ramanujan")]
        lambda: LambdaPolicy,
        #[arg(long, default_value_t = 1001)]
        grid: usize,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hall–Knuth random probes of the reverse-search tree of the k-gon
    /// flip graph.
    Hallknuth {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        probes: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The numeric companion process u_t, q_t for G(n, d/n).
    Ernumeric {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        runs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Per-run dump in addition to the averaged output.
        #[arg(long)]
        runs_out: Option<PathBuf>,
    },
}

#[derive(Debug, Parser)]
#[command(
    name = "expander-growth",
    about = "Graph-size estimation via random growth and spectral mixing bounds",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidInput(_) | Error::Parse { .. } => 2,
        Error::Convergence { .. } => 3,
        Error::ConstructionFailure(_) => 4,
    }
}

fn run(cli: Cli) -> expander_growth::Result<()> {
    match &cli.command {
        Command::Gen { family, seed, out } => {
            let Some(out) = out else {
                eprintln!("error: gen requires --out <path>");
                std::process::exit(1);
            };
            commands::cmd_gen(family, out, *seed)
        }
        Command::Spectral {
            input,
            tol,
            max_iter,
            out,
        } => commands::cmd_spectral(input, *tol, *max_iter, out.as_deref()),
        Command::Grow(args) => commands::cmd_grow(args),
        Command::Bounds {
            curve,
            d,
            lambda,
            grid,
            tol,
            out,
        } => commands::cmd_bounds(curve, *d, lambda, *grid, *tol, out.as_deref()),
        Command::Hallknuth {
            k,
            probes,
            seed,
            out,
        } => {
            if *probes == 0 {
                // Usage-level error, reported before any work happens.
                eprintln!("error: --probes must be >= 1");
                std::process::exit(1);
            }
            commands::cmd_hallknuth(*k, *probes, *seed, out.as_deref())
        }
        Command::Ernumeric {
            n,
            d,
            seed,
            runs,
            out,
            runs_out,
        } => {
            if *runs == 0 || !(*d > 0.0 && *d < *n as f64) {
                eprintln!("error: ernumeric requires runs >= 1 and 0 < d < n");
                std::process::exit(1);
            }
            commands::cmd_ernumeric(*n, *d, *seed, *runs, out.as_deref(), runs_out.as_deref())
        }
    }
}

fn main() {
    if let Ok(threads) = std::env::var("EXPANDER_GROWTH_THREADS") {
        match threads.parse::<usize>() {
            Ok(t) if t >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
            }
            _ => {
                eprintln!("error: EXPANDER_GROWTH_THREADS must be a positive integer");
                std::process::exit(1);
            }
        }
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap's default exit code is 2; this tool reserves 2 for input
            // errors and reports usage problems as 1. Help/version are
            // successful exits.
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Err(err) = run(cli) {
        eprintln!("error: {err}");
        std::process::exit(exit_code(&err));
    }
}
