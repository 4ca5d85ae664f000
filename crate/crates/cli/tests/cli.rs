use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use cloudlet_cli::RunReport;

fn scenario(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("scenarios")
        .join(name)
}

fn cloudlet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cloudlet"))
        .args(args)
        .output()
        .unwrap()
}

fn cloudlet_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cloudlet"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn run_json_reports_min_min_example() {
    let path = scenario("table1.json");
    let out = cloudlet(&[
        "run",
        path.to_str().unwrap(),
        "--policy",
        "minmin",
        "--tie-break",
        "min-exec",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: RunReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.makespan, 7.5);
    assert_eq!(report.tie_break, "min-exec");
    assert!(report.cloudlets.iter().all(|c| c.vm_id == 1));
}

#[test]
fn selective_json_carries_decision_trace() {
    let path = scenario("table1.json");
    let out = cloudlet(&["run", path.to_str().unwrap(), "--format", "json"]);
    let report: RunReport = serde_json::from_slice(&out.stdout).unwrap();
    let cases: Vec<&str> = report.decisions.iter().map(|d| d.case.as_str()).collect();
    assert_eq!(
        cases,
        ["Case2MaxMin", "Case1MinMin", "Case2MaxMin", "Case3MinMin"]
    );
    assert_eq!(report.makespan, 5.5);
}

#[test]
fn compare_csv_rows_in_fixed_order() {
    let path = scenario("table2.json");
    let out = cloudlet(&[
        "compare",
        path.to_str().unwrap(),
        "--format",
        "csv",
        "--mode",
        "time",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let policies: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(
        policies,
        [
            "fcfs",
            "fcfs",
            "minmin",
            "minmin",
            "maxmin",
            "maxmin",
            "selective",
            "selective",
            "oracle",
            "oracle"
        ]
    );
    assert!(text.starts_with("policy,mode,makespan,vm_id,utilization\n"));
    assert!(text.contains("fcfs,time,8.2,0,1\n"));
    assert!(text.contains("oracle,time,5.6,"));
}

#[test]
fn reads_scenario_from_stdin_and_draws_gantt() {
    let input = std::fs::read_to_string(scenario("table1.json")).unwrap();
    let out = cloudlet_stdin(&["run", "-", "--policy", "maxmin", "--gantt"], &input);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("makespan 5"));
    assert!(text.contains("VM0 |"));
    assert!(text.contains("VM1 |"));
}

#[test]
fn oracle_subcommand() {
    let path = scenario("table2.json");
    let out = cloudlet(&["oracle", path.to_str().unwrap(), "--format", "json"]);
    let report: RunReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.makespan, 5.6);

    let out = cloudlet(&["oracle", path.to_str().unwrap(), "--budget", "63"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn exit_codes() {
    let path = scenario("table2.json");
    let path = path.to_str().unwrap();
    assert_eq!(
        cloudlet(&["run", path, "--policy", "random"]).status.code(),
        Some(1)
    );
    assert_eq!(
        cloudlet(&["run", path, "--mode", "batch"]).status.code(),
        Some(1)
    );
    assert_eq!(
        cloudlet(&["run", path, "--seed", "7"]).status.code(),
        Some(1)
    );
    assert_eq!(cloudlet(&["explode"]).status.code(), Some(1));
    assert_eq!(cloudlet(&["--help"]).status.code(), Some(0));
    assert_eq!(
        cloudlet(&["run", "/nonexistent/scenario.json"])
            .status
            .code(),
        Some(2)
    );

    let out = cloudlet_stdin(
        &["run", "-"],
        r#"{"vms":[{"mips":10},{"mips":0}],"cloudlets":[]}"#,
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("vms[1].mips"));
    let out = cloudlet_stdin(&["run", "-"], "not json");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn empty_scenario_runs() {
    let out = cloudlet_stdin(
        &["compare", "-", "--format", "json"],
        r#"{"vms":[{"mips":3}],"cloudlets":[]}"#,
    );
    assert_eq!(out.status.code(), Some(0));
    let reports: Vec<RunReport> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports.len(), 5);
    assert!(reports.iter().all(|r| r.makespan == 0.0));
}
