use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use tempclique::{EdgeFormat, Lifetime, OracleBounds, Time};
use tempclique_cli::{run_sweep, GammaGrid, HarnessError, MaximumMode, SweepConfig, ValueList};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    #[value(name = "3col")]
    Three,
    #[value(name = "4col")]
    Four,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Maximum {
    Temporal,
    Cardinal,
}

/// Enumerate maximal (delta, gamma)-cliques of a temporal network over a
/// grid of delta and gamma values.
#[derive(Parser, Debug)]
#[command(name = "tempclique", version, about, long_about = None)]
struct Args {
    /// Edge list, one `u v t` (or `u v w t`) contact per line.
    #[arg(long)]
    input: PathBuf,

    #[arg(long, value_enum, default_value = "3col")]
    format: Format,

    /// Grid spacing; inferred as the gcd of timestamp offsets when omitted.
    #[arg(long)]
    dt: Option<Time>,

    /// Shift timestamps so the earliest lands on this value.
    #[arg(long)]
    origin: Option<Time>,

    /// Observation span `START:END`; defaults to the span of the timestamps.
    #[arg(long, allow_hyphen_values = true)]
    lifetime: Option<String>,

    /// Window lengths in raw time units: `A,B,C` or `START:STEP:END`.
    #[arg(long, allow_hyphen_values = true)]
    delta: String,

    /// Occurrence thresholds: `A,B,C`, `START:STEP:END`, or `auto`.
    #[arg(long, default_value = "auto")]
    gamma: String,

    /// Write `cliques_<delta>_<gamma>.jsonl` for every cell.
    #[arg(long)]
    emit_cliques: bool,

    /// Write the temporally or cardinally maximum cliques of every cell.
    #[arg(long, value_enum)]
    maximum: Option<Maximum>,

    /// Compare every cell against exhaustive search when the instance is small enough.
    #[arg(long)]
    oracle_check: bool,

    #[arg(long, default_value_t = 6)]
    oracle_max_vertices: usize,

    #[arg(long, default_value_t = 24)]
    oracle_max_grid: usize,

    /// Fail on inputs that list a pair in both orientations instead of merging them.
    #[arg(long)]
    reject_directed: bool,

    /// Fill the `wall_ms` column (makes outputs run-dependent).
    #[arg(long)]
    wall_time: bool,

    #[arg(long, default_value = "out")]
    out: PathBuf,

    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

fn parse_lifetime(s: &str) -> Result<Lifetime, HarnessError> {
    let bad = || HarnessError::Config(format!("bad lifetime {s:?}, expected START:END"));
    let (start, end) = s.split_once(':').ok_or_else(bad)?;
    let start = start.trim().parse().map_err(|_| bad())?;
    let end = end.trim().parse().map_err(|_| bad())?;
    Lifetime::new(start, end).map_err(|e| HarnessError::Config(e.to_string()))
}

fn config_from(args: Args) -> Result<SweepConfig, HarnessError> {
    let ValueList(deltas) = args.delta.parse()?;
    let gammas: GammaGrid = args.gamma.parse()?;
    let mut config = SweepConfig::new(args.input, args.out);
    config.format = match args.format {
        Format::Three => EdgeFormat::ThreeColumn,
        Format::Four => EdgeFormat::FourColumn,
    };
    config.dt = args.dt;
    config.origin = args.origin;
    config.lifetime = args.lifetime.as_deref().map(parse_lifetime).transpose()?;
    config.directed_as_undirected = !args.reject_directed;
    config.deltas = deltas;
    config.gammas = gammas;
    config.emit_cliques = args.emit_cliques;
    config.maximum = args.maximum.map(|m| match m {
        Maximum::Temporal => MaximumMode::Temporal,
        Maximum::Cardinal => MaximumMode::Cardinal,
    });
    config.oracle_check = args.oracle_check;
    config.oracle_bounds = OracleBounds {
        max_vertices: args.oracle_max_vertices,
        max_grid: args.oracle_max_grid,
    };
    config.jobs = args.jobs;
    config.record_wall_time = args.wall_time;
    Ok(config)
}

fn run(args: Args) -> Result<(), HarnessError> {
    let config = config_from(args)?;
    let outcome = run_sweep(&config)?;
    if let Some(report) = &outcome.report {
        eprint!("{}", report.to_kv_lines());
    }
    eprintln!("dt={}", outcome.dt);
    log::info!(
        "wrote {} rows to {}",
        outcome.rows.len(),
        config.out_dir.join("sweep.csv").display()
    );
    if !outcome.mismatches.is_empty() {
        return Err(HarnessError::OracleMismatch {
            cells: outcome.mismatches,
        });
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    // clap exits with 2 on usage errors; 2 is reserved for oracle mismatches
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
