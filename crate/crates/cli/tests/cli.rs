use std::fs;
use std::path::Path;
use std::process::Command;

use tempclique::{random_temporal_network, GeneratorConfig, Lifetime};
use tempclique_cli::{run_sweep, GammaGrid, HarnessError, SweepConfig, SWEEP_HEADER};

const S1: &str = "a b 1\na b 2\na b 3\nb a 5\na b 6\na b 7\n";
const S2: &str = "% triangle\n0 1 1\n0 1 3\n0 2 2\n0 2 4\n1 2 2\n1 2 3\n";

fn write_input(dir: &Path, name: &str, text: &str) -> std::path::PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn rows(out: &Path) -> Vec<Vec<i64>> {
    let text = fs::read_to_string(out.join("sweep.csv")).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(SWEEP_HEADER));
    lines
        .map(|l| l.split(',').map(|f| f.parse().unwrap()).collect())
        .collect()
}

fn numeric_s1(dir: &Path) -> std::path::PathBuf {
    write_input(dir, "s1.txt", "0 1 1\n0 1 2\n0 1 3\n1 0 5\n0 1 6\n0 1 7\n")
}

#[test]
fn non_numeric_vertices_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_input(dir.path(), "s1.txt", S1);
    let config = SweepConfig::new(&input, dir.path().join("out"));
    assert!(matches!(
        run_sweep(&config),
        Err(HarnessError::Input { .. })
    ));
}

#[test]
fn s1_gamma_list() {
    let dir = tempfile::tempdir().unwrap();
    let mut config = SweepConfig::new(numeric_s1(dir.path()), dir.path().join("out"));
    config.lifetime = Some(Lifetime::new(0, 10).unwrap());
    config.deltas = vec![3];
    config.gammas = GammaGrid::Values(vec![2, 3, 4, 5]);
    config.emit_cliques = true;
    run_sweep(&config).unwrap();
    let counts: Vec<i64> = rows(&config.out_dir).iter().map(|r| r[2]).collect();
    assert_eq!(counts, vec![1, 1, 0, 0]);
    let first = fs::read_to_string(config.out_dir.join("cliques_3_2.jsonl")).unwrap();
    assert_eq!(first, "{\"vertices\":[0,1],\"t_a\":0,\"t_b\":9}\n");
    let empty = fs::read_to_string(config.out_dir.join("cliques_3_5.jsonl")).unwrap();
    assert!(empty.is_empty());
    assert_eq!(rows(&config.out_dir)[3], vec![3, 5, 0, 0, 0, 0, 0, 0]);
}

#[test]
fn s2_row() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_input(dir.path(), "s2.txt", S2);
    let mut config = SweepConfig::new(&input, dir.path().join("out"));
    config.lifetime = Some(Lifetime::new(0, 5).unwrap());
    config.deltas = vec![4];
    config.gammas = GammaGrid::Values(vec![2]);
    config.oracle_check = true;
    let outcome = run_sweep(&config).unwrap();
    assert!(outcome.mismatches.is_empty());
    let row = &rows(&config.out_dir)[0];
    assert_eq!(&row[..5], &[4, 2, 1, 5, 3]);
    assert!(row[5] >= row[6], "iterations cover the seeds");
}

#[test]
fn grid_size_and_row_invariants() {
    let dir = tempfile::tempdir().unwrap();
    let net = random_temporal_network(&GeneratorConfig {
        vertex_count: 6,
        grid_length: 20,
        edge_probability: 0.5,
        seed: 11,
    });
    let text: String = net
        .edges()
        .iter()
        .map(|e| format!("{} {} {}\n", e.u, e.v, e.t))
        .collect();
    let input = write_input(dir.path(), "rand.txt", &text);
    let mut config = SweepConfig::new(&input, dir.path().join("out"));
    config.deltas = vec![2, 4, 6];
    config.gammas = GammaGrid::Values(vec![1, 2, 3, 4]);
    config.oracle_check = true;
    let outcome = run_sweep(&config).unwrap();
    assert!(outcome.mismatches.is_empty());
    let rows = rows(&config.out_dir);
    assert_eq!(rows.len(), 12);
    for r in &rows {
        let (count, duration, cardinality, iterations, seeds) = (r[2], r[3], r[4], r[5], r[6]);
        assert!(iterations >= seeds);
        if count == 0 {
            assert_eq!((duration, cardinality), (0, 0));
        } else {
            assert!(duration >= r[0] && cardinality >= 2);
        }
    }
}

#[test]
fn auto_gamma_reaches_zero_and_stops() {
    let dir = tempfile::tempdir().unwrap();
    let input = numeric_s1(dir.path());
    let mut config = SweepConfig::new(&input, dir.path().join("out"));
    config.lifetime = Some(Lifetime::new(0, 10).unwrap());
    config.deltas = vec![2, 3];
    config.gammas = GammaGrid::Auto;
    run_sweep(&config).unwrap();
    let rows = rows(&config.out_dir);
    for delta in [2, 3] {
        let lane: Vec<&Vec<i64>> = rows.iter().filter(|r| r[0] == delta).collect();
        assert_eq!(lane[0][1], 2);
        assert_eq!(lane.last().unwrap()[2], 0);
        assert!(lane[..lane.len() - 1].iter().all(|r| r[2] > 0));
        let gammas: Vec<i64> = lane.iter().map(|r| r[1]).collect();
        assert!(gammas.windows(2).all(|w| w[1] == w[0] + 1));
    }
}

#[test]
fn parallel_jobs_match_serial() {
    let dir = tempfile::tempdir().unwrap();
    let net = random_temporal_network(&GeneratorConfig {
        vertex_count: 7,
        grid_length: 30,
        edge_probability: 0.4,
        seed: 5,
    });
    let text: String = net
        .edges()
        .iter()
        .map(|e| format!("{} {} {}\n", e.u, e.v, e.t))
        .collect();
    let input = write_input(dir.path(), "rand.txt", &text);
    let mut outputs = Vec::new();
    for jobs in [1, 3] {
        let mut config = SweepConfig::new(&input, dir.path().join(format!("out{jobs}")));
        config.deltas = vec![2, 3, 5];
        config.gammas = GammaGrid::Values(vec![1, 2, 3]);
        config.emit_cliques = true;
        config.jobs = jobs;
        run_sweep(&config).unwrap();
        let mut files: Vec<_> = fs::read_dir(&config.out_dir)
            .unwrap()
            .map(|e| {
                let p = e.unwrap().path();
                (p.file_name().unwrap().to_owned(), fs::read(&p).unwrap())
            })
            .collect();
        files.sort();
        outputs.push(files);
    }
    assert_eq!(outputs[0], outputs[1]);
}

#[test]
fn unwritable_output_fails_before_parsing() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = write_input(dir.path(), "blocker", "");
    // input does not exist either; the output error must win
    let config = SweepConfig::new(dir.path().join("missing.txt"), blocker.join("out"));
    assert!(matches!(
        run_sweep(&config),
        Err(HarnessError::Output { .. })
    ));
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tempclique"))
}

#[test]
fn binary_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_input(dir.path(), "s2.txt", S2);
    let out = dir.path().join("out");

    let ok = binary()
        .args([
            "--input",
            input.to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
        ])
        .args([
            "--delta",
            "4",
            "--gamma",
            "2",
            "--lifetime",
            "0:5",
            "--emit-cliques",
            "--oracle-check",
        ])
        .output()
        .unwrap();
    assert!(
        ok.status.success(),
        "{}",
        String::from_utf8_lossy(&ok.stderr)
    );
    assert!(String::from_utf8_lossy(&ok.stderr).contains("static_edges=3"));
    let jsonl = fs::read_to_string(out.join("cliques_4_2.jsonl")).unwrap();
    assert_eq!(jsonl, "{\"vertices\":[0,1,2],\"t_a\":0,\"t_b\":5}\n");

    let missing_delta = binary()
        .args(["--input", input.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(missing_delta.status.code(), Some(1));

    let bad_gamma = binary()
        .args([
            "--input",
            input.to_str().unwrap(),
            "--delta",
            "4",
            "--gamma",
            "0",
        ])
        .args(["--out", out.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(bad_gamma.status.code(), Some(1));

    let help = binary().arg("--help").output().unwrap();
    assert!(help.status.success());
}

#[test]
fn binary_maximum_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_input(dir.path(), "s2.txt", S2);
    let out = dir.path().join("out");
    let status = binary()
        .args([
            "--input",
            input.to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
        ])
        .args([
            "--delta",
            "4",
            "--gamma",
            "1,2",
            "--lifetime",
            "0:5",
            "--maximum",
            "cardinal",
        ])
        .output()
        .unwrap();
    assert!(status.status.success());
    let names: Vec<String> = fs::read_dir(&out)
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    assert!(names.iter().any(|n| n.contains("cardinal")), "{names:?}");
}
