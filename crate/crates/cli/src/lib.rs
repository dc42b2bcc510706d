//! Sweep driver behind the `tempclique` command: reads an edge list, runs
//! maximal-clique enumeration over a grid of (Δ, γ) cells, and writes
//! `sweep.csv` plus optional per-cell clique listings.

use std::path::PathBuf;

use thiserror::Error;

pub mod grid;
pub mod output;
pub mod sweep;

pub use grid::{GammaGrid, ValueList};
pub use output::{SweepWriter, SWEEP_HEADER};
pub use sweep::{
    run_cell, run_sweep, sweep_network, CellResult, SweepConfig, SweepOutcome, SweepRow,
};
pub use tempclique::{select_maximum, MaximumMode};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{0}")]
    Config(String),
    #[error("{path}: {source}")]
    Input {
        path: PathBuf,
        #[source]
        source: tempclique::GraphError,
    },
    #[error("cannot write {path}: {source}")]
    Output {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("oracle disagreed on {} cell(s): {cells:?}", cells.len())]
    OracleMismatch { cells: Vec<(i64, usize)> },
}

impl HarnessError {
    /// 2 for oracle disagreement, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::OracleMismatch { .. } => 2,
            _ => 1,
        }
    }
}
