//! End-to-end subcommand behavior: stdout shapes, files on disk, and
//! the pipe from construct through verify, solve, and export.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_antimagic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_antimagic"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn construct_text_output_matches_worked_example() {
    let out = run(&["construct", "--n", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("labeling 11\n"), "{text}");
    // hub-to-leaf labels come first in canonical edge order
    assert!(text.contains("1 2 1\n"));
    assert!(text.contains("1 3 2\n"));
    assert!(text.contains("1 4 3\n"));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("case=C2"));
    assert!(stderr.contains("hub_w=15"));
    assert!(stderr.contains("leaf_w=19"));
    assert!(stderr.contains("apex_w=30"));
}

#[test]
fn construct_json_output_is_parseable() {
    let out = run(&["construct", "--n", "7", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let edges = value["edges"].as_array().unwrap();
    assert_eq!(edges.len(), 23);
    let mut labels: Vec<u64> = edges.iter().map(|e| e["label"].as_u64().unwrap()).collect();
    labels.sort_unstable();
    assert!(labels.iter().copied().eq(1..=23));
}

#[test]
fn construct_verify_solve_export_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["construct", "--n", "3", "--out", "h3.lab"]);
    assert!(out.status.success());

    // the verify input graph is written by hand from the labeling's edges
    let graph_text = "p 6\nc hub 1, leaves 2-4, joined pair 5-6\ne 1 2\ne 1 3\ne 1 4\ne 1 5\ne 1 6\ne 2 5\ne 2 6\ne 3 5\ne 3 6\ne 4 5\ne 4 6\n";
    std::fs::write(dir.path().join("h3.graph"), graph_text).unwrap();

    let out = run_in(dir.path(), &["verify", "h3.graph", "h3.lab"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("colors: 3"), "{text}");
    assert!(text.contains("accept"), "{text}");

    let out = run_in(dir.path(), &["solve", "h3.graph"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["chi_la"], 3);
    assert_eq!(report["exact"], true);
    assert_eq!(report["lower_bound_source"], "chromatic_number");

    let out = run_in(dir.path(), &["export", "h3.graph", "--labeling", "h3.lab", "--out", "h3.dot"]);
    assert!(out.status.success());
    let dot = std::fs::read_to_string(dir.path().join("h3.dot")).unwrap();
    assert!(dot.starts_with("graph"));
    assert!(dot.contains("v1 [label=\"15\"]"), "{dot}");
}

#[test]
fn verify_reports_every_violation() {
    let dir = tempfile::tempdir().unwrap();
    // triangle 1-2-3 with a pendant 4 on vertex 3
    std::fs::write(dir.path().join("paw.graph"), "p 4\ne 1 2\ne 1 3\ne 2 3\ne 3 4\n").unwrap();
    // weights 7, 4, 7, 2: the colliding pair 1-3 is an edge
    std::fs::write(dir.path().join("paw.lab"), "labeling 4\n1 2 3\n1 3 4\n2 3 1\n3 4 2\n").unwrap();
    let out = run_in(dir.path(), &["verify", "paw.graph", "paw.lab"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("reject"));
    assert!(text.contains("violation: vertices 1 and 3 both weigh 7"), "{text}");
}

#[test]
fn exhaustive_solver_is_selectable() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("c4.graph"), "p 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n").unwrap();
    let out = run_in(dir.path(), &["solve", "c4.graph", "--solver", "exhaustive"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["chi_la"], 3);
    assert_eq!(report["exact"], true);

    let out = run_in(dir.path(), &["solve", "c4.graph", "--solver", "simulated-annealing"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn sweep_csv_covers_the_accepting_domain() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["sweep", "--from", "1", "--to", "99", "--out", "sweep.csv", "--jobs", "2"]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(dir.path().join("sweep.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("n,case,verified,colors,hub_w,leaf_w,apex_w,elapsed_ms"));
    let rows: Vec<&str> = lines.collect();
    // odd n <= 99 with n+1 not divisible by 3
    assert_eq!(rows.len(), 34);
    assert!(rows[0].starts_with("1,Base1,true,3,10,"));
    assert!(rows.iter().all(|r| r.split(',').nth(2) == Some("true")));
    assert!(rows.iter().all(|r| r.split(',').nth(3) == Some("3")));
    // rows stay ordered under parallel chunking
    let ns: Vec<u64> = rows.iter().map(|r| r.split(',').next().unwrap().parse().unwrap()).collect();
    assert!(ns.windows(2).all(|w| w[0] < w[1]));

    let out = run(&["sweep", "--from", "10", "--to", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn counterexample_json_names_the_refuted_inequality() {
    let out = run(&["counterexample", "--n", "13"]);
    assert!(out.status.success());
    let verdict: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(verdict["refuted"], true);
    assert_eq!(verdict["chi_la_star"], 14);
    assert_eq!(verdict["chi_la_join_upper"], 3);
    assert_eq!(verdict["claimed_lower"], 15);
    let claim = verdict["claimed_inequality"].as_str().unwrap();
    assert!(claim.contains("chi_la"), "{claim}");
}
