//! `mutvis`: verify, construct and search mutual-visibility sets.

mod check;
mod search;
mod table;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use mutvis::constructions::{
    construct_cylinder, construct_torus_square, embed_cylinder, extend_torus_to,
};
use mutvis::solver::{mu_lower_bound_seeded, DEFAULT_VERTEX_CAP};
use mutvis::{
    is_mutual_visibility_set, mu_exact, upper_bound, Error, ProductGraph, SolveOptions, VertexSet,
};

/// Process exit statuses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Failed = 1,
    BadInput = 2,
    Unsupported = 3,
    TimedOut = 4,
}

impl From<&Error> for Status {
    fn from(e: &Error) -> Self {
        match e {
            Error::UnsupportedSize { .. } | Error::VertexCapExceeded { .. } => Status::Unsupported,
            _ => Status::BadInput,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "mutvis",
    version,
    about = "Mutual-visibility sets in products of paths and cycles"
)]
struct Cli {
    /// Worker threads (default: all cores, capped by MUTVIS_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Grid,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a set file is a mutual-visibility set.
    Verify {
        #[arg(long)]
        graph: ProductGraph,
        #[arg(long)]
        set: PathBuf,
        /// Format of the set file.
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print a closed-form set: `C_t x C_t` (or `C_s x C_t` with --s), or with
    /// --cylinder `P_{t-1} x C_t` (or `P_s x C_t`).
    Construct {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        cylinder: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        no_verify: bool,
    },
    /// Compute the mutual-visibility number exactly.
    Mu {
        #[arg(long)]
        graph: ProductGraph,
        /// Seconds before giving up with a partial answer.
        #[arg(long)]
        timeout: Option<f64>,
        /// Seed for randomized restarts.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Allow up to 128 vertices.
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Recompute the cylinder (PC) or torus (CC) table and compare with the
    /// published values.
    Table {
        #[arg(long, value_enum)]
        which: table::Which,
        #[arg(long, default_value_t = 5)]
        max_t: usize,
        #[arg(long, default_value_t = 6)]
        max_s: usize,
        /// Per-cell timeout in seconds.
        #[arg(long, default_value_t = 60.0)]
        timeout: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Convert a set between JSON and grid form.
    Render {
        #[arg(long)]
        set: PathBuf,
        /// Read the file as a grid instead of JSON (needs --graph).
        #[arg(long)]
        from_grid: bool,
        #[arg(long)]
        graph: Option<ProductGraph>,
        /// Output format (default: the other one).
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Verify every construction up to a ceiling, plus the shipped fixtures.
    Check {
        #[arg(long, default_value_t = 40)]
        ceiling: usize,
        /// Check these fixture files instead of the embedded ones.
        #[arg(long)]
        fixture_dir: Option<PathBuf>,
    },
    /// Look for a large witness on one graph and print it as a fixture.
    Search {
        #[arg(long)]
        graph: ProductGraph,
        #[arg(long)]
        timeout: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the witness here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = worker_count(cli.threads);
    // Ignore failure: a pool may already exist in tests.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
    let status = match run(cli.command, threads) {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e}");
            Status::from(&e)
        }
    };
    ExitCode::from(status as u8)
}

fn worker_count(requested: Option<usize>) -> usize {
    let available = std::thread::available_parallelism().map_or(1, |n| n.get());
    let mut n = requested.unwrap_or(available);
    if let Some(cap) = std::env::var("MUTVIS_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        n = n.min(cap);
    }
    n.max(1)
}

fn run(command: Command, threads: usize) -> mutvis::Result<Status> {
    match command {
        Command::Verify { graph, set, format } => {
            let m = read_set(&set, format, Some(graph))?;
            if *m.graph() != graph {
                return Err(Error::GraphMismatch {
                    expected: graph.to_string(),
                    found: m.graph().to_string(),
                });
            }
            let report = is_mutual_visibility_set(&m);
            match report.failing_pair {
                None => {
                    println!("OK (n={})", m.len());
                    Ok(Status::Ok)
                }
                Some((u, v)) => {
                    println!("FAIL: {u} and {v} are not mutually visible (n={})", m.len());
                    Ok(Status::Failed)
                }
            }
        }
        Command::Construct {
            t,
            s,
            cylinder,
            format,
            no_verify,
        } => {
            let m = if cylinder {
                let m = construct_cylinder(t)?;
                match s {
                    Some(s) => embed_cylinder(&m, s)?,
                    None => m,
                }
            } else {
                let m = construct_torus_square(t)?;
                match s {
                    Some(s) => extend_torus_to(&m, s)?,
                    None => m,
                }
            };
            if !no_verify {
                if let Some((u, v)) = is_mutual_visibility_set(&m).failing_pair {
                    eprintln!(
                        "construction on {} failed verification: {u} and {v}",
                        m.graph()
                    );
                    return Ok(Status::Failed);
                }
            }
            print!("{}", render(&m, format));
            Ok(Status::Ok)
        }
        Command::Mu {
            graph,
            timeout,
            seed,
            force,
            format,
        } => {
            let opts = SolveOptions {
                timeout: timeout.map(seconds).transpose()?,
                seed_lower_bound: Some(mu_lower_bound_seeded(&graph, seed).1),
                vertex_cap: if force {
                    usize::MAX
                } else {
                    DEFAULT_VERTEX_CAP
                },
                threads,
                seed,
            };
            let report = match mu_exact(&graph, &opts) {
                Err(e @ Error::VertexCapExceeded { .. }) => {
                    let (lb, _) = mu_lower_bound_seeded(&graph, seed);
                    eprintln!("error: {e}");
                    eprintln!("bounds: {lb} <= mu({graph}) <= {}", upper_bound(&graph));
                    return Ok(Status::Unsupported);
                }
                r => r?,
            };
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Grid => {
                    println!(
                        "mu({graph}) {} {}",
                        if report.exhaustive { "=" } else { ">=" },
                        report.mu
                    );
                    print!("{}", report.witness.to_grid());
                }
            }
            Ok(if report.exhaustive {
                Status::Ok
            } else {
                Status::TimedOut
            })
        }
        Command::Table {
            which,
            max_t,
            max_s,
            timeout,
            seed,
        } => table::run(which, max_t, max_s, seconds(timeout)?, seed, threads),
        Command::Render {
            set,
            from_grid,
            graph,
            format,
        } => {
            let input = if from_grid {
                Format::Grid
            } else {
                Format::Json
            };
            let m = read_set(&set, input, graph)?;
            let output = format.unwrap_or(if from_grid {
                Format::Json
            } else {
                Format::Grid
            });
            print!("{}", render(&m, output));
            Ok(Status::Ok)
        }
        Command::Check {
            ceiling,
            fixture_dir,
        } => check::run(ceiling, fixture_dir.as_deref()),
        Command::Search {
            graph,
            timeout,
            seed,
            out,
        } => search::run(
            &graph,
            timeout.map(seconds).transpose()?,
            seed,
            threads,
            out.as_deref(),
        ),
    }
}

fn seconds(s: f64) -> mutvis::Result<Duration> {
    Duration::try_from_secs_f64(s).map_err(|_| Error::InvalidInput(format!("invalid timeout {s}")))
}

pub fn read_set(
    path: &Path,
    format: Format,
    graph: Option<ProductGraph>,
) -> mutvis::Result<VertexSet> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    match format {
        Format::Json => VertexSet::from_json(&text),
        Format::Grid => {
            let graph =
                graph.ok_or_else(|| Error::InvalidInput("reading a grid needs --graph".into()))?;
            VertexSet::from_grid(graph, &text)
        }
    }
}

pub fn render(m: &VertexSet, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", m.to_json()),
        Format::Grid => m.to_grid(),
    }
}
