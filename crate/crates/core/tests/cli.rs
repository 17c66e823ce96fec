//! Runs the `widthlab` binary end to end.

use std::path::Path;
use std::process::{Command, Output};

use widthlab::graph::{read_graph, write_graph};
use widthlab::random::sample_gnp;
use widthlab::structure::two_core;
use widthlab::Graph;

fn widthlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_widthlab")).args(args).env("WIDTHLAB_THREADS", "1").output().unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gnp_then_core_matches_the_library() {
    let dir = tempfile::tempdir().unwrap();
    let g_path = dir.path().join("g.txt");
    let core_path = dir.path().join("core.txt");
    let out = widthlab(&["gnp", "--n", "3000", "--epsilon", "0.3", "--seed", "7", "--out", path_str(&g_path)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let g = read_graph(&std::fs::read_to_string(&g_path).unwrap()).unwrap();
    assert_eq!(g, sample_gnp(3000, 1.3 / 3000.0, 7).unwrap());

    let out = widthlab(&["core", "--in", path_str(&g_path), "--out", path_str(&core_path)]);
    assert!(out.status.success());
    let written = std::fs::read_to_string(&core_path).unwrap();
    assert_eq!(written, write_graph(&two_core(&g).graph));
}

#[test]
fn gnp_without_out_writes_the_graph_to_stdout() {
    let a = widthlab(&["gnp", "--n", "50", "--p", "0.1", "--seed", "3"]);
    let b = widthlab(&["gnp", "--n", "50", "--p", "0.1", "--seed", "3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let g = read_graph(&String::from_utf8(a.stdout).unwrap()).unwrap();
    assert_eq!(g, sample_gnp(50, 0.1, 3).unwrap());
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(widthlab(&["gnp", "--n", "5", "--p", "0.5", "--bogus"]).status.code(), Some(2));
    assert_eq!(widthlab(&["gnp", "--n", "5"]).status.code(), Some(2));
    assert_eq!(widthlab(&["gnp", "--n", "5", "--p", "0.5", "--epsilon", "0.1"]).status.code(), Some(2));
    assert_eq!(widthlab(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn bad_input_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "3 1\n0 7\n").unwrap();
    let out = widthlab(&["core", "--in", path_str(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
    let missing = dir.path().join("missing.txt");
    assert_eq!(widthlab(&["core", "--in", path_str(&missing)]).status.code(), Some(1));
}

#[test]
fn width_of_k4_with_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = dir.path().join("k4.txt");
    std::fs::write(&k4, write_graph(&Graph::complete(4))).unwrap();
    let out = widthlab(&["width", "--in", path_str(&k4), "--exact"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "tw=3 rw=1");
    assert!(dir.path().join("k4.txt.td").exists());
    assert!(dir.path().join("k4.txt.rd").exists());
    // exact is the only supported mode
    assert_eq!(widthlab(&["width", "--in", path_str(&k4)]).status.code(), Some(2));
}

#[test]
fn cheeger_of_a_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = dir.path().join("c6.txt");
    std::fs::write(&c6, write_graph(&Graph::cycle(6))).unwrap();
    let out = widthlab(&["cheeger", "--in", path_str(&c6)]);
    assert!(out.status.success());
    // two cut edges against d(S) = 6
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "phi=1/3 bisection=2");
}

#[test]
fn experiment_csv_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"experiment": "sparse_scaling", "n": [20000], "epsilon": [0.2], "trials": 3, "seed": 4}"#)
        .unwrap();
    let run = |name: &str, threads: &str| {
        let out_path = dir.path().join(name);
        let out = Command::new(env!("CARGO_BIN_EXE_widthlab"))
            .args(["experiment", "--in", path_str(&cfg), "--out", path_str(&out_path)])
            .env("WIDTHLAB_THREADS", threads)
            .output()
            .unwrap();
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        std::fs::read_to_string(out_path).unwrap()
    };
    let a = run("a.csv", "1");
    let b = run("b.csv", "3");
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 4);
    assert!(a.starts_with("experiment,n,epsilon,trial,seed,"));
}

#[test]
fn seeded_verbs_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let g_path = dir.path().join("g.txt");
    let out = widthlab(&["gnp", "--n", "2000", "--epsilon", "0.5", "--seed", "1", "--out", path_str(&g_path)]);
    assert!(out.status.success());
    for verb in [
        vec!["extract", "--in", path_str(&g_path), "--seed", "9"],
        vec!["tree-grow", "--in", path_str(&g_path), "--delta", "0.2", "--seed", "9"],
    ] {
        let a = widthlab(&verb);
        let b = widthlab(&verb);
        assert!(a.status.success(), "{:?}: {}", verb, String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout);
        assert!(!a.stdout.is_empty());
    }
}
