//! Black-box checks of the command-line surface: output wording, CSV
//! shape, and exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::OnceLock;

use revan_cli::sweep;

fn revan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_revan"))
        .args(args)
        .output()
        .expect("spawn revan")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn write_graph(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn compute_reports_path_and_triangle_values() {
    let dir = tempfile::tempdir().unwrap();

    let p4 = write_graph(dir.path(), "p4.edges", "4 3\n0 1\n1 2\n2 3\n");
    let out = revan(&["compute", p4.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("R1 8\n"), "{text}");
    assert!(text.contains("M1 10\n"), "{text}");

    let k3 = write_graph(dir.path(), "k3.edges", "3 3\n0 1\n1 2\n0 2\n");
    let out = revan(&["compute", k3.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("R1 12\n"), "{text}");
    assert!(text.contains("RSO 8.485281"), "{text}");
}

#[test]
fn compute_rejects_duplicate_edge() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_graph(dir.path(), "dup.edges", "3 2\n0 1\n0 1\n");
    let out = revan(&["compute", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("duplicate"), "{}", stderr(&out));
}

#[test]
fn ensemble_grid_endpoints_reach_complete_graphs() {
    let dir = tempfile::tempdir().unwrap();

    let er = dir.path().join("er.csv");
    let out = revan(&[
        "ensemble", "--model", "er", "--n", "125", "--grid", "log:0.001:1:25",
        "--realizations", "50", "--seed", "3", "--out", er.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let rows = sweep::parse_csv(&std::fs::read_to_string(&er).unwrap()).unwrap();
    assert_eq!(rows.len(), 25);
    let last = rows.last().unwrap();
    assert_eq!(last.param, 1.0);
    assert_eq!(last.mean_r, 124.0);

    let rg = dir.path().join("rg.csv");
    let out = revan(&[
        "ensemble", "--model", "rg", "--n", "125", "--grid", "log:0.01:sqrt2:10",
        "--realizations", "50", "--seed", "3", "--out", rg.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let rows = sweep::parse_csv(&std::fs::read_to_string(&rg).unwrap()).unwrap();
    assert_eq!(rows.last().unwrap().mean_d, 124.0);
}

#[test]
fn csv_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let out = revan(&[
        "ensemble", "--model", "er", "--n", "64", "--grid", "log:0.01:1:6",
        "--realizations", "50", "--seed", "8", "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));

    let text = std::fs::read_to_string(&path).unwrap();
    let rows = sweep::parse_csv(&text).unwrap();
    let mut emitted = Vec::new();
    sweep::write_csv(&rows, &mut emitted).unwrap();
    assert_eq!(text.as_bytes(), emitted.as_slice());
}

#[test]
fn collapse_of_identical_runs_is_zero() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let out = revan(&[
        "ensemble", "--model", "er", "--n", "125", "--grid", "log:0.05:1:8",
        "--realizations", "100", "--seed", "4", "--out", a.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let b = dir.path().join("b.csv");
    std::fs::copy(&a, &b).unwrap();

    let out = revan(&[
        "collapse", a.to_str().unwrap(), b.to_str().unwrap(),
        "--index", "R1", "--r-min", "1", "--tolerance", "0",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("collapse 0.000000"), "{}", stdout(&out));
}

/// Two modest sweeps at different sizes, shared by the tolerance tests.
fn desk_scale_pair() -> &'static (tempfile::TempDir, PathBuf, PathBuf) {
    static PAIR: OnceLock<(tempfile::TempDir, PathBuf, PathBuf)> = OnceLock::new();
    PAIR.get_or_init(|| {
        let dir = tempfile::tempdir().unwrap();
        let mut paths = Vec::new();
        for n in ["125", "500"] {
            let path = dir.path().join(format!("er{n}.csv"));
            let out = revan(&[
                "ensemble", "--model", "er", "--n", n, "--grid", "log:0.01:1:12",
                "--realizations", "400", "--seed", "77", "--out", path.to_str().unwrap(),
            ]);
            assert!(out.status.success(), "{}", stderr(&out));
            paths.push(path);
        }
        let small = paths.remove(0);
        let large = paths.remove(0);
        (dir, small, large)
    })
}

#[test]
fn collapse_across_sizes_passes_default_tolerance() {
    let (_, small, large) = desk_scale_pair();
    let out = revan(&[
        "collapse", small.to_str().unwrap(), large.to_str().unwrap(),
        "--index", "R1", "--r-min", "10", "--tolerance", "0.05",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}\n{}", stdout(&out), stderr(&out));
    assert!(stdout(&out).contains("all collapse deviations within tolerance"));
}

#[test]
fn collapse_with_zero_tolerance_fails_on_noise() {
    let (_, small, large) = desk_scale_pair();
    let out = revan(&[
        "collapse", small.to_str().unwrap(), large.to_str().unwrap(),
        "--index", "R1", "--r-min", "10", "--tolerance", "0",
    ]);
    assert_eq!(out.status.code(), Some(1), "{}", stdout(&out));
    assert!(stderr(&out).contains("exceeds tolerance"), "{}", stderr(&out));
}

#[test]
fn predict_prints_closed_form_values() {
    let out = revan(&["predict", "R1", "--grid", "10"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "10 100\n");

    let out = revan(&["predict", "FRPi", "--grid", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("1 0.34657359"), "{}", stdout(&out));

    let out = revan(&["predict", "RSO", "--grid", "10"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("10 70.710678"), "{}", stdout(&out));

    let out = revan(&["predict", "FRPi", "--grid", "0,1"]);
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));
}
