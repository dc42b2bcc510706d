//! Δ × γ parameter sweeps over one network.

use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;

use rayon::prelude::*;
use tempclique::{
    brute_force_maximal, parse_edge_stream, select_maximum, Clique, EdgeDictionary, EdgeFormat,
    Enumerator, Lifetime, MaximumMode, OracleBounds, Parameters, ParseOptions, ParseReport,
    TemporalNetwork, Time,
};

use crate::grid::{GammaGrid, AUTO_GAMMA_START};
use crate::output::{cliques_file_name, maximum_file_name, SweepWriter};
use crate::HarnessError;

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub input: PathBuf,
    pub format: EdgeFormat,
    pub dt: Option<Time>,
    pub origin: Option<Time>,
    pub lifetime: Option<Lifetime>,
    pub directed_as_undirected: bool,
    /// Window lengths in raw time units.
    pub deltas: Vec<Time>,
    pub gammas: GammaGrid,
    pub emit_cliques: bool,
    pub maximum: Option<MaximumMode>,
    pub oracle_check: bool,
    pub oracle_bounds: OracleBounds,
    pub out_dir: PathBuf,
    pub jobs: usize,
    /// Fill `wall_ms`; left at 0 otherwise so outputs are reproducible.
    pub record_wall_time: bool,
}

impl SweepConfig {
    pub fn new(input: impl Into<PathBuf>, out_dir: impl Into<PathBuf>) -> Self {
        Self {
            input: input.into(),
            format: EdgeFormat::ThreeColumn,
            dt: None,
            origin: None,
            lifetime: None,
            directed_as_undirected: true,
            deltas: Vec::new(),
            gammas: GammaGrid::Auto,
            emit_cliques: false,
            maximum: None,
            oracle_check: false,
            oracle_bounds: OracleBounds::default(),
            out_dir: out_dir.into(),
            jobs: 1,
            record_wall_time: false,
        }
    }

    fn parse_options(&self) -> ParseOptions {
        ParseOptions {
            format: self.format,
            directed_as_undirected: self.directed_as_undirected,
            origin: self.origin,
            dt: self.dt,
            lifetime: self.lifetime,
            ..ParseOptions::default()
        }
    }
}

/// Metrics of one (Δ, γ) cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub delta: Time,
    pub gamma: usize,
    pub maximal_count: usize,
    pub max_duration: Time,
    pub max_cardinality: usize,
    pub iterations: u64,
    pub seed_count: u64,
    pub wall_ms: u128,
}

#[derive(Debug, Clone)]
pub struct CellResult {
    pub row: SweepRow,
    pub cliques: Vec<Clique>,
    /// `Some(true)` when the oracle agreed, `Some(false)` when it did not,
    /// `None` when it was not run.
    pub oracle_agrees: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct SweepOutcome {
    pub report: Option<ParseReport>,
    pub dt: Time,
    pub rows: Vec<SweepRow>,
    /// Cells whose enumeration disagreed with the oracle.
    pub mismatches: Vec<(Time, usize)>,
}

/// Parses the input and runs the sweep, writing into `config.out_dir`.
/// The output directory is prepared before anything else so an unwritable
/// path fails fast.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepOutcome, HarnessError> {
    let mut writer = SweepWriter::create(&config.out_dir)?;
    let file = File::open(&config.input).map_err(|e| HarnessError::Input {
        path: config.input.clone(),
        source: e.into(),
    })?;
    let (net, report) =
        parse_edge_stream(BufReader::new(file), &config.parse_options()).map_err(|e| {
            HarnessError::Input {
                path: config.input.clone(),
                source: e,
            }
        })?;
    log::info!("parsed {} edges, dt={}", report.edges, net.dt());
    let mut outcome = sweep_network(&net, config, &mut writer)?;
    outcome.report = Some(report);
    Ok(outcome)
}

/// Runs every cell of the sweep over an already-built network.
pub fn sweep_network(
    net: &TemporalNetwork,
    config: &SweepConfig,
    writer: &mut SweepWriter,
) -> Result<SweepOutcome, HarnessError> {
    let dt = net.dt();
    if config.deltas.is_empty() {
        return Err(HarnessError::Config("no delta values given".into()));
    }
    for &delta in &config.deltas {
        if delta < dt || delta % dt != 0 {
            return Err(HarnessError::Config(format!(
                "delta {delta} is not a positive multiple of dt {dt}"
            )));
        }
    }
    let dict = net.dictionary();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .map_err(|e| HarnessError::Config(format!("thread pool: {e}")))?;

    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    let mut record = |cells: Vec<CellResult>| -> Result<(), HarnessError> {
        for cell in cells {
            write_cell(writer, config, &cell)?;
            if cell.oracle_agrees == Some(false) {
                mismatches.push((cell.row.delta, cell.row.gamma));
            }
            rows.push(cell.row);
        }
        Ok(())
    };

    match &config.gammas {
        GammaGrid::Values(gammas) => {
            let cells: Vec<(Time, usize)> = config
                .deltas
                .iter()
                .flat_map(|&d| gammas.iter().map(move |&g| (d, g)))
                .collect();
            for chunk in cells.chunks(config.jobs.max(1)) {
                let done: Vec<CellResult> = pool.install(|| {
                    chunk
                        .par_iter()
                        .map(|&(delta, gamma)| run_cell(net, &dict, delta, gamma, config))
                        .collect()
                });
                record(done)?;
            }
        }
        GammaGrid::Auto => {
            for chunk in config.deltas.chunks(config.jobs.max(1)) {
                let lanes: Vec<Vec<CellResult>> = pool.install(|| {
                    chunk
                        .par_iter()
                        .map(|&delta| auto_lane(net, &dict, delta, config))
                        .collect()
                });
                for lane in lanes {
                    record(lane)?;
                }
            }
        }
    }

    Ok(SweepOutcome {
        report: None,
        dt,
        rows,
        mismatches,
    })
}

/// γ = 2, 3, … at fixed Δ, stopping after the first empty cell.
fn auto_lane(
    net: &TemporalNetwork,
    dict: &EdgeDictionary,
    delta: Time,
    config: &SweepConfig,
) -> Vec<CellResult> {
    let mut lane = Vec::new();
    for gamma in AUTO_GAMMA_START.. {
        let cell = run_cell(net, dict, delta, gamma, config);
        let empty = cell.row.maximal_count == 0;
        lane.push(cell);
        if empty {
            break;
        }
    }
    lane
}

pub fn run_cell(
    net: &TemporalNetwork,
    dict: &EdgeDictionary,
    delta: Time,
    gamma: usize,
    config: &SweepConfig,
) -> CellResult {
    let params = Parameters::new(delta, gamma, net.dt()).expect("grid validated before the sweep");
    let run = Enumerator::new(net, dict, params).run();
    let row = SweepRow {
        delta,
        gamma,
        maximal_count: run.cliques.len(),
        max_duration: run.cliques.iter().map(Clique::duration).max().unwrap_or(0),
        max_cardinality: run
            .cliques
            .iter()
            .map(Clique::cardinality)
            .max()
            .unwrap_or(0),
        iterations: run.stats.iterations,
        seed_count: run.stats.seeds,
        wall_ms: if config.record_wall_time {
            run.stats.wall_time.as_millis()
        } else {
            0
        },
    };
    let oracle_agrees = if config.oracle_check {
        match brute_force_maximal(net, &params, config.oracle_bounds) {
            Ok(expected) => {
                let agrees = expected == run.cliques;
                if !agrees {
                    log::error!("oracle mismatch at delta={delta} gamma={gamma}");
                }
                Some(agrees)
            }
            Err(e) => {
                log::warn!("oracle skipped at delta={delta} gamma={gamma}: {e}");
                None
            }
        }
    } else {
        None
    };
    CellResult {
        row,
        cliques: run.cliques,
        oracle_agrees,
    }
}

fn write_cell(
    writer: &mut SweepWriter,
    config: &SweepConfig,
    cell: &CellResult,
) -> Result<(), HarnessError> {
    let (delta, gamma) = (cell.row.delta, cell.row.gamma);
    writer.write_row(&cell.row)?;
    if config.emit_cliques {
        writer.write_jsonl(&cliques_file_name(delta, gamma), &cell.cliques)?;
    }
    if let Some(mode) = config.maximum {
        writer.write_jsonl(
            &maximum_file_name(mode, delta, gamma),
            &select_maximum(&cell.cliques, mode),
        )?;
    }
    Ok(())
}
