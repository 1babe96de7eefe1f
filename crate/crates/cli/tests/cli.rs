use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bclique-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("bclique").chain(args.iter().copied());
    let code = bclique::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(out: &str) -> Value {
    serde_json::from_str(out).unwrap()
}

const K3: &str = "n 3\ne 1 2\ne 1 3\ne 2 3\nb 2 3\n";
const K4: &str = "n 4\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\nb 1 2 3 4\n";

#[test]
fn compute_emits_an_envelope() {
    let g = scratch("k3.g", K3);
    let (code, out, _) = run(&["compute", "--graph", g.to_str().unwrap()]);
    assert_eq!(code, 0);
    let env = json(&out);
    assert_eq!(env["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(env["input_hash"].as_str().unwrap().len(), 64);
    assert_eq!(env["result"]["clique_count"], "8");
    assert_eq!(env["params"]["command"], "compute");
}

#[test]
fn output_is_byte_identical_across_runs() {
    let g = scratch("k4-stab.g", K4);
    let args = ["check", "stability", "--graph", g.to_str().unwrap(), "--seed", "7", "--trials", "50"];
    let (a, first, _) = run(&args);
    let (b, second, _) = run(&args);
    assert_eq!(a, b);
    assert_eq!(first, second);
}

#[test]
fn input_hash_tracks_file_contents() {
    let a = scratch("hash-a.g", K3);
    let b = scratch("hash-b.g", "n 3\ne 1 2\ne 1 3\ne 2 3\nb 2\n");
    let (_, out_a, _) = run(&["compute", "--graph", a.to_str().unwrap()]);
    let (_, out_b, _) = run(&["compute", "--graph", b.to_str().unwrap()]);
    assert_ne!(json(&out_a)["input_hash"], json(&out_b)["input_hash"]);
}

#[test]
fn violations_exit_with_two() {
    let g = scratch("k4.g", K4);
    let (code, out, _) = run(&["check", "spectral", "--graph", g.to_str().unwrap(), "--y", "1"]);
    assert_eq!(code, bclique::EXIT_VIOLATIONS);
    let env = json(&out);
    let reports = env["reports"].as_array().unwrap();
    assert!(reports.iter().any(|r| r["claim"] == "negative-root-bound" && r["verdict"] == "violated"));
}

#[test]
fn hom_check_reads_paths_relative_to_the_map() {
    scratch("c6.g", "n 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 1\nb 1 2 3 4 5 6\n");
    scratch("k2.g", "n 2\ne 1 2\n");
    let map = scratch("fold.map", "g c6.g\nh k2.g\nm 1 1\nm 2 2\nm 3 1\nm 4 2\nm 5 1\nm 6 2\n");
    let (code, out, _) = run(&["check", "hom", "--map", map.to_str().unwrap()]);
    assert_eq!(code, bclique::EXIT_VIOLATIONS);
    let env = json(&out);
    let lift = env["reports"].as_array().unwrap().iter().find(|r| r["claim"] == "clique-lift").unwrap();
    assert_eq!(lift["verdict"], "violated");
}

#[test]
fn decimal_y_is_rejected() {
    let g = scratch("k3-dec.g", K3);
    let (code, _, err) = run(&["zeta", "--graph", g.to_str().unwrap(), "--y", "0.5"]);
    assert_eq!(code, bclique::EXIT_ERROR);
    assert!(!err.is_empty());
}

#[test]
fn rational_y_is_accepted() {
    let g = scratch("k3-rat.g", K3);
    let (code, out, _) = run(&["zeta", "--graph", g.to_str().unwrap(), "--y", "1/2"]);
    assert_eq!(code, 0);
    assert!(json(&out)["result"].is_object());
}

#[test]
fn missing_file_is_an_error() {
    let (code, out, err) = run(&["compute", "--graph", "/nonexistent/graph.g"]);
    assert_eq!(code, bclique::EXIT_ERROR);
    assert!(out.is_empty());
    assert!(err.contains("/nonexistent/graph.g"));
}

#[test]
fn malformed_graph_is_an_error() {
    let g = scratch("bad.g", "n 3\ne 1 9\n");
    let (code, _, _) = run(&["compute", "--graph", g.to_str().unwrap()]);
    assert_eq!(code, bclique::EXIT_ERROR);
}

#[test]
fn binary_reports_help_and_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_bclique");
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
    let text = String::from_utf8(help.stdout).unwrap();
    for sub in ["compute", "zeta", "bounds", "check", "spectrum", "corpus"] {
        assert!(text.contains(sub), "help lacks {sub}");
    }
    let g = scratch("k4-bin.g", K4);
    let status = Command::new(bin)
        .args(["check", "spectral", "--graph", g.to_str().unwrap(), "--y", "1"])
        .output()
        .unwrap()
        .status;
    assert_eq!(status.code(), Some(2));
    let bad = Command::new(bin).arg("frobnicate").output().unwrap().status;
    assert_eq!(bad.code(), Some(1));
}
