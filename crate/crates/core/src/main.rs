use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};

use mutvis::harness::{self, Scope, SuiteConfig};
use mutvis::solver::{self, SearchStatus, SolveOptions};
use mutvis::witnesses::{self, FormulaId};
use mutvis::{visibility, PropertyKind};

/// Mutual-visibility and general-position invariants of graphs, double
/// graphs and Mycielskians.
#[derive(Parser)]
#[command(name = "mutvis", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the edge list of a graph spec
    Gen { spec: String },
    /// Print the distance matrix
    Dist { spec: String },
    /// Test whether a vertex set (e.g. `v1,v3,v2'`) has a property
    CheckSet {
        spec: String,
        #[arg(long, value_parser = parse_kind)]
        kind: PropertyKind,
        #[arg(long)]
        set: String,
    },
    /// Compute a maximum set for a property
    Invariant {
        spec: String,
        #[arg(long, value_parser = parse_kind)]
        kind: PropertyKind,
        /// Stop once a set of this size is found
        #[arg(long)]
        target: Option<usize>,
        /// Seconds before the search returns its best set so far
        #[arg(long)]
        time_limit: Option<f64>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Write the witness as a golden line
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
    /// List every maximum set (small graphs only)
    Enumerate {
        spec: String,
        #[arg(long, value_parser = parse_kind)]
        kind: PropertyKind,
    },
    /// Evaluate a closed-form value, e.g. `formula mu_myc_path 8`
    Formula { name: String, params: Vec<usize> },
    /// Run the reproduction suite
    VerifyPaper {
        #[arg(long, default_value = "all", value_parser = parse_scope)]
        scope: Scope,
        #[arg(long, default_value_t = harness::corpus::DEFAULT_SEED)]
        seed: u64,
        /// Largest instance order to solve; larger ones are skipped
        #[arg(long, default_value_t = solver::DEFAULT_MAX_ORDER)]
        max_n: usize,
        /// Per-check solver limit in seconds
        #[arg(long, default_value_t = 300.0)]
        time_limit: f64,
        /// Threads running checks (default: all cores)
        #[arg(long)]
        workers: Option<usize>,
        /// Also write the report as CSV
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn parse_kind(s: &str) -> Result<PropertyKind, String> {
    s.parse().map_err(|e: mutvis::Error| e.to_string())
}

fn parse_scope(s: &str) -> Result<Scope, String> {
    s.parse().map_err(|e: mutvis::Error| e.to_string())
}

fn seconds(s: f64) -> mutvis::Result<Duration> {
    Duration::try_from_secs_f64(s)
        .map_err(|_| mutvis::Error::InvalidParameter(format!("bad time limit {s}")))
}

fn status_name(s: SearchStatus) -> &'static str {
    match s {
        SearchStatus::Optimal => "optimal",
        SearchStatus::TargetReached => "target-reached",
        SearchStatus::TimedOut => "timed-out",
    }
}

fn run(command: Command) -> mutvis::Result<ExitCode> {
    match command {
        Command::Gen { spec } => {
            print!("{}", harness::parse_graph_spec(&spec)?.to_edge_list());
        }
        Command::Dist { spec } => {
            print!("{}", harness::parse_graph_spec(&spec)?.distances());
        }
        Command::CheckSet { spec, kind, set } => {
            let g = harness::parse_graph_spec(&spec)?;
            let s = g.parse_set(&set)?;
            println!("{}", visibility::satisfies(kind, &g, &g.distances(), s)?);
        }
        Command::Invariant {
            spec,
            kind,
            target,
            time_limit,
            workers,
            witness_out,
        } => {
            let g = harness::parse_graph_spec(&spec)?;
            let mut options = SolveOptions::default().with_workers(workers);
            options.target = target;
            if let Some(t) = time_limit {
                options.time_limit = Some(seconds(t)?);
            }
            let r = solver::max_property_set(&g, kind, &options)?;
            println!("graph: {spec}");
            println!("kind: {kind}");
            println!("value: {}", r.value);
            println!("status: {}", status_name(r.status));
            println!("witness: {}", g.format_set(r.witness));
            println!("nodes: {}", r.nodes_explored);
            println!("elapsed: {:.3}s", r.elapsed.as_secs_f64());
            if let Some(path) = witness_out {
                std::fs::write(&path, witnesses::format_golden(&g, &[r.witness]))
                    .map_err(|source| mutvis::Error::Io { path, source })?;
            }
        }
        Command::Enumerate { spec, kind } => {
            let g = harness::parse_graph_spec(&spec)?;
            let sets = solver::enumerate_maximum_sets(&g, kind)?;
            print!("{}", witnesses::format_golden(&g, &sets));
            eprintln!(
                "{} maximum set(s) of size {}",
                sets.len(),
                sets.first().map_or(0, |s| s.len())
            );
        }
        Command::Formula { name, params } => {
            let id: FormulaId = name.parse()?;
            println!("{}", witnesses::formula_value(id, &params)?);
        }
        Command::VerifyPaper {
            scope,
            seed,
            max_n,
            time_limit,
            workers,
            csv,
        } => {
            let mut config = SuiteConfig {
                scope,
                seed,
                max_n,
                time_limit: Some(seconds(time_limit)?),
                ..SuiteConfig::default()
            };
            if let Some(w) = workers {
                config.workers = w.max(1);
            }
            let report = harness::run_verification_suite(&config);
            print!("{}", report.table());
            println!();
            print!("{}", report.machine_lines());
            if let Some(path) = csv {
                std::fs::write(&path, report.csv())
                    .map_err(|source| mutvis::Error::Io { path, source })?;
            }
            return Ok(ExitCode::from(report.exit_code() as u8));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
