//! `sweep.csv` and per-cell JSONL writers.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;
use tempclique::{Clique, MaximumMode, Time, VertexId};

use crate::sweep::SweepRow;
use crate::HarnessError;

pub const SWEEP_HEADER: &str =
    "delta,gamma,maximal_count,max_duration,max_cardinality,iterations,seed_count,wall_ms";

#[derive(Serialize)]
struct CliqueRecord<'a> {
    vertices: &'a [VertexId],
    t_a: Time,
    t_b: Time,
}

pub fn csv_line(row: &SweepRow) -> String {
    format!(
        "{},{},{},{},{},{},{},{}\n",
        row.delta,
        row.gamma,
        row.maximal_count,
        row.max_duration,
        row.max_cardinality,
        row.iterations,
        row.seed_count,
        row.wall_ms
    )
}

/// One JSON object per line, in the order given.
pub fn jsonl(cliques: &[Clique]) -> String {
    let mut out = String::new();
    for c in cliques {
        let record = CliqueRecord {
            vertices: c.members(),
            t_a: c.t_a(),
            t_b: c.t_b(),
        };
        out.push_str(&serde_json::to_string(&record).expect("plain integers serialize"));
        out.push('\n');
    }
    out
}

pub fn cliques_file_name(delta: Time, gamma: usize) -> String {
    format!("cliques_{delta}_{gamma}.jsonl")
}

pub fn maximum_file_name(mode: MaximumMode, delta: Time, gamma: usize) -> String {
    let mode = match mode {
        MaximumMode::Temporal => "temporal",
        MaximumMode::Cardinal => "cardinal",
    };
    format!("maximum_{mode}_{delta}_{gamma}.jsonl")
}

/// Single writer for a sweep's output directory. Rows are flushed as they
/// arrive so partial sweeps leave a usable CSV behind.
pub struct SweepWriter {
    dir: PathBuf,
    csv: BufWriter<File>,
}

impl SweepWriter {
    /// Creates the directory and `sweep.csv` with its header.
    pub fn create(dir: &Path) -> Result<Self, HarnessError> {
        let io = |e: std::io::Error| HarnessError::Output {
            path: dir.to_path_buf(),
            source: e,
        };
        fs::create_dir_all(dir).map_err(io)?;
        let path = dir.join("sweep.csv");
        let file = File::create(&path).map_err(|e| HarnessError::Output {
            path: path.clone(),
            source: e,
        })?;
        let mut csv = BufWriter::new(file);
        writeln!(csv, "{SWEEP_HEADER}").map_err(io)?;
        csv.flush().map_err(io)?;
        Ok(Self {
            dir: dir.to_path_buf(),
            csv,
        })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn write_row(&mut self, row: &SweepRow) -> Result<(), HarnessError> {
        let path = self.dir.join("sweep.csv");
        let wrap = |e| HarnessError::Output { path, source: e };
        self.csv
            .write_all(csv_line(row).as_bytes())
            .and_then(|_| self.csv.flush())
            .map_err(wrap)
    }

    pub fn write_jsonl(&self, name: &str, cliques: &[Clique]) -> Result<(), HarnessError> {
        let path = self.dir.join(name);
        fs::write(&path, jsonl(cliques)).map_err(|e| HarnessError::Output { path, source: e })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_lines() {
        let cliques = [
            Clique::new([0, 1], 0, 9).unwrap(),
            Clique::new([4, 2, 7], 3, 5).unwrap(),
        ];
        assert_eq!(
            jsonl(&cliques),
            "{\"vertices\":[0,1],\"t_a\":0,\"t_b\":9}\n{\"vertices\":[2,4,7],\"t_a\":3,\"t_b\":5}\n"
        );
        assert_eq!(jsonl(&[]), "");
    }

    #[test]
    fn row_format() {
        let row = SweepRow {
            delta: 300,
            gamma: 2,
            maximal_count: 14,
            max_duration: 1200,
            max_cardinality: 4,
            iterations: 99,
            seed_count: 40,
            wall_ms: 0,
        };
        assert_eq!(csv_line(&row), "300,2,14,1200,4,99,40,0\n");
        assert_eq!(cliques_file_name(300, 2), "cliques_300_2.jsonl");
    }
}
