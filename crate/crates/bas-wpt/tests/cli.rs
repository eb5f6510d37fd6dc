//! End-to-end tests of the `bas-wpt` binary: subcommands, exit codes,
//! report formats, trace emission, and config-file merging.

use std::path::PathBuf;
use std::process::{Command, Output};

use bas_wpt::BatchSummary;

fn bas_wpt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bas-wpt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn temp_path(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bas_wpt_cli_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn run_emits_json_and_succeeds() {
    let output = bas_wpt(&[
        "run",
        "--problem",
        "sphere",
        "--iters",
        "40",
        "--restarts",
        "3",
        "--seed",
        "0",
    ]);
    assert!(output.status.success(), "{output:?}");
    let summary: BatchSummary = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(summary.problem, "sphere");
    assert_eq!(summary.runs.len(), 3);
    assert_eq!(summary.base_seed, 0);
    assert!(summary.best.feasible);
}

#[test]
fn run_is_deterministic_across_invocations() {
    let args = [
        "run",
        "--problem",
        "himmelblau",
        "--iters",
        "50",
        "--restarts",
        "4",
        "--seed",
        "9",
    ];
    let first: BatchSummary = serde_json::from_str(&stdout(&bas_wpt(&args))).unwrap();
    let second: BatchSummary = serde_json::from_str(&stdout(&bas_wpt(&args))).unwrap();
    assert_eq!(first, second);
}

#[test]
fn run_emits_csv_when_asked() {
    let output = bas_wpt(&[
        "run",
        "--problem",
        "sphere",
        "--iters",
        "30",
        "--restarts",
        "2",
        "--seed",
        "1",
        "--format",
        "csv",
    ]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.starts_with("run,seed,feasible,best_f\n"));
    let data_rows = text
        .lines()
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .count()
        - 1;
    assert_eq!(data_rows, 2);
}

#[test]
fn run_writes_the_trace_file() {
    let trace = temp_path("trace.csv");
    let _ = std::fs::remove_file(&trace);
    let output = bas_wpt(&[
        "run",
        "--problem",
        "sphere",
        "--iters",
        "25",
        "--restarts",
        "2",
        "--seed",
        "0",
        "--trace",
        trace.to_str().unwrap(),
    ]);
    assert!(output.status.success());
    let text = std::fs::read_to_string(&trace).unwrap();
    assert!(text.starts_with("iter,delta,d,F_current,F_best\n"));
    assert_eq!(text.lines().count(), 26);
}

#[test]
fn config_file_supplies_values_and_flags_override() {
    let config = temp_path("batch.conf");
    std::fs::write(
        &config,
        "problem = sphere\niters = 30\nrestarts = 2\nseed = 5\nformat = csv\n",
    )
    .unwrap();
    // file alone
    let output = bas_wpt(&["run", "--config", config.to_str().unwrap()]);
    assert!(output.status.success());
    assert!(stdout(&output).starts_with("run,seed,feasible,best_f\n"));
    // flag overrides the file's format
    let output = bas_wpt(&[
        "run",
        "--config",
        config.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(output.status.success());
    let summary: BatchSummary = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(summary.base_seed, 5);
}

#[test]
fn no_feasible_solution_exits_one() {
    // a single 1-iteration pressure-vessel run from this seed ends infeasible
    let output = bas_wpt(&[
        "run",
        "--problem",
        "pressure-vessel",
        "--iters",
        "1",
        "--restarts",
        "1",
        "--seed",
        "1",
    ]);
    assert_eq!(output.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&output.stderr).contains("no feasible solution"));
    // the report is still emitted for inspection
    let summary: BatchSummary = serde_json::from_str(&stdout(&output)).unwrap();
    assert!(!summary.best.feasible);
    assert!(summary.stats.is_none());
}

#[test]
fn missing_problem_is_a_config_error() {
    let output = bas_wpt(&["run", "--iters", "10", "--restarts", "1", "--seed", "0"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("--problem"));
}

#[test]
fn unknown_problem_lists_known_names() {
    let output = bas_wpt(&[
        "run",
        "--problem",
        "rastrigin",
        "--iters",
        "10",
        "--restarts",
        "1",
        "--seed",
        "0",
    ]);
    assert_eq!(output.status.code(), Some(2));
    let err = String::from_utf8_lossy(&output.stderr).to_string();
    assert!(
        err.contains("pressure-vessel") && err.contains("himmelblau") && err.contains("sphere")
    );
}

#[test]
fn paper_exact_schedule_conflicts_with_delta_add() {
    let output = bas_wpt(&[
        "run",
        "--problem",
        "sphere",
        "--iters",
        "10",
        "--restarts",
        "1",
        "--seed",
        "0",
        "--paper-exact-schedule",
        "--delta-add",
        "0.5",
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn bad_config_file_is_a_config_error() {
    let config = temp_path("bad.conf");
    std::fs::write(&config, "problem = sphere\nnot-a-key = 1\n").unwrap();
    let output = bas_wpt(&["run", "--config", config.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("not-a-key"));
}

#[test]
fn verify_tables_passes_and_reports_cells() {
    let output = bas_wpt(&["verify-tables"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("verify-tables: PASS"));
    assert!(text.contains("row ref-01"));
    assert!(text.contains("skipped bas-wpt"));
}

#[test]
fn list_problems_names_the_registry() {
    let output = bas_wpt(&["list-problems"]);
    assert!(output.status.success());
    let text = stdout(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("pressure-vessel"));
    assert!(lines[1].starts_with("himmelblau"));
    assert!(lines[2].starts_with("sphere"));
}

#[test]
fn paper_exact_schedule_flag_is_accepted() {
    let output = bas_wpt(&[
        "run",
        "--problem",
        "sphere",
        "--iters",
        "20",
        "--restarts",
        "2",
        "--seed",
        "0",
        "--paper-exact-schedule",
    ]);
    assert!(output.status.success());
    let summary: BatchSummary = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(summary.config.delta_add, summary.config.delta_init);
}
