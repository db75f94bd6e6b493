//! End-to-end command tests over the fixture files, both through the batch
//! layer and the installed binary.

use std::path::{Path, PathBuf};
use std::process::Command;

use fourcolor::batch::{self, DischargeCmdOptions, Filter, ReduceCmdOptions};
use fourcolor::script::RadiusPolicy;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

/// Strip the wall-clock column so reports can be compared across runs.
fn normalize_millis(report: &str) -> String {
    report
        .lines()
        .map(|l| {
            let mut cols: Vec<&str> = l.split('\t').collect();
            if cols.len() == 7 && cols[6].chars().all(|c| c.is_ascii_digit()) {
                cols[6] = "-";
            }
            cols.join("\t")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn reduce_reports_suite_verdicts_in_file_order() {
    let out = batch::cmd_reduce(fixtures().join("suite.conf"), &ReduceCmdOptions::default());
    assert_eq!(out.exit, batch::EXIT_FAIL, "suite holds non-reducible configurations");
    let rows: Vec<&str> = out.report.lines().collect();
    assert!(rows[0].starts_with("name\t"));
    assert!(rows[1].starts_with("birkhoff\t6\t4\ttrue\t0\t"));
    assert!(rows[2].starts_with("wheel5\t5\t1\tfalse\t"));
    assert!(rows[3].starts_with("edge55\t6\t2\tfalse\t"));
}

#[test]
fn reduce_is_deterministic_across_job_counts() {
    let base = fixtures().join("suite.conf");
    let one = batch::cmd_reduce(&base, &ReduceCmdOptions { jobs: Some(1), ..Default::default() });
    let many = batch::cmd_reduce(&base, &ReduceCmdOptions { jobs: Some(8), ..Default::default() });
    assert_eq!(normalize_millis(&one.report), normalize_millis(&many.report));
    assert_eq!(one.exit, many.exit);
}

#[test]
fn reduce_filter_selects_rows() {
    let opts = ReduceCmdOptions {
        filter: Some(Filter::parse("ring<=5").unwrap()),
        ..Default::default()
    };
    let out = batch::cmd_reduce(fixtures().join("suite.conf"), &opts);
    assert!(out.report.contains("wheel5"));
    assert!(!out.report.contains("birkhoff"));
    let byname = ReduceCmdOptions {
        filter: Some(Filter::parse("name=birkhoff").unwrap()),
        ..Default::default()
    };
    let out2 = batch::cmd_reduce(fixtures().join("suite.conf"), &byname);
    assert_eq!(out2.exit, batch::EXIT_PASS);
}

#[test]
fn validate_reports_screens() {
    let out = batch::cmd_validate(fixtures().join("suite.conf"));
    assert_eq!(out.exit, batch::EXIT_PASS);
    assert!(out.report.starts_with("name\tkind\toutcome\tring\tradius\twarnings"));
    assert!(out.report.contains("edge55\tvalidate\tpass\t6\t1\t"));
    assert!(out.report.contains("birkhoff\tvalidate\tpass\t6\t1\t"));
}

#[test]
fn stats_histogram_single_record() {
    let out = batch::cmd_stats(fixtures().join("birkhoff.conf"));
    assert_eq!(out.exit, batch::EXIT_PASS);
    assert!(out.report.contains("6\t1\t100.0"));
    let suite = batch::cmd_stats(fixtures().join("suite.conf"));
    assert!(suite.report.contains("5\t1\t33.3"));
    assert!(suite.report.contains("6\t2\t66.7"));
}

#[test]
fn discharge_fixture_passes_and_verbose_traces() {
    let opts = DischargeCmdOptions { degrees: vec![5], verbose: true, radius_policy: RadiusPolicy::Error };
    let out = batch::cmd_discharge(
        fixtures().join("toy.rules"),
        fixtures().join("unavoidable.conf"),
        fixtures().join("present"),
        &opts,
    );
    assert_eq!(out.exit, batch::EXIT_PASS, "{}", out.report);
    assert!(out.report.contains("5\tdischarge\tpass\t7"));
    assert!(out.report.contains("edge55"), "verbose trace names matched configurations");
    assert!(out.report.contains("zetas"));
}

#[test]
fn overcharge_command_reports_witness() {
    let out = batch::cmd_overcharge(
        fixtures().join("overcharge_violating.rules"),
        fixtures().join("unavoidable.conf"),
        5,
        RadiusPolicy::Error,
    );
    assert_eq!(out.exit, batch::EXIT_FAIL);
    assert!(out.report.contains("deg 6 bound 6/10 witness"));
    assert!(out.report.contains("recount 6/10"));
    assert!(out.report.contains("overall fail"));
    let pass = batch::cmd_overcharge(
        fixtures().join("empty.rules"),
        fixtures().join("unavoidable.conf"),
        5,
        RadiusPolicy::Error,
    );
    assert_eq!(pass.exit, batch::EXIT_PASS);
    assert!(pass.report.contains("overall pass"));
}

#[test]
fn oracle_consistency_on_icosahedron_faces() {
    let out = batch::cmd_oracle_consistency(fixtures().join("icosahedron.graph"), Some(0));
    assert_eq!(out.exit, batch::EXIT_PASS, "{}", out.report);
    assert!(out.report.contains("pass"));
}

#[test]
fn exhausted_budget_exits_three() {
    use fourcolor::kempe::Budget;
    use fourcolor::reduce::ReduceOptions;
    let opts = ReduceCmdOptions {
        reduce: ReduceOptions { ring_cap: 16, budget: Budget { max_rounds: 0, time_limit: None } },
        ..Default::default()
    };
    let out = batch::cmd_reduce(fixtures().join("suite.conf"), &opts);
    assert_eq!(out.exit, batch::EXIT_BUDGET);
    assert!(out.report.contains("budget-exceeded"));
}

#[test]
fn missing_file_is_an_input_error() {
    let out = batch::cmd_reduce(fixtures().join("nope.conf"), &ReduceCmdOptions::default());
    assert_eq!(out.exit, batch::EXIT_INPUT);
}

#[test]
fn binary_runs_reduce_and_exits_by_contract() {
    let exe = env!("CARGO_BIN_EXE_fourcolor");
    let ok = Command::new(exe)
        .args(["reduce"])
        .arg(fixtures().join("birkhoff.conf"))
        .output()
        .expect("spawn binary");
    assert!(ok.status.success());
    let stdout = String::from_utf8_lossy(&ok.stdout);
    assert!(stdout.contains("birkhoff\t6\t4\ttrue"));

    let fail = Command::new(exe)
        .args(["reduce"])
        .arg(fixtures().join("suite.conf"))
        .output()
        .expect("spawn binary");
    assert_eq!(fail.status.code(), Some(1));

    let input_err = Command::new(exe)
        .args(["stats"])
        .arg(fixtures().join("missing.conf"))
        .output()
        .expect("spawn binary");
    assert_eq!(input_err.status.code(), Some(2));
}

#[test]
fn binary_writes_report_file() {
    let exe = env!("CARGO_BIN_EXE_fourcolor");
    let dir = std::env::temp_dir().join("fourcolor-report-test");
    std::fs::create_dir_all(&dir).unwrap();
    let report = dir.join("out.tsv");
    let run = Command::new(exe)
        .args(["reduce"])
        .arg(fixtures().join("birkhoff.conf"))
        .arg("--report")
        .arg(&report)
        .output()
        .expect("spawn binary");
    assert!(run.status.success());
    let written = std::fs::read_to_string(&report).unwrap();
    assert_eq!(written, String::from_utf8_lossy(&run.stdout));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn binary_runs_discharge_and_oracle() {
    let exe = env!("CARGO_BIN_EXE_fourcolor");
    let out = Command::new(exe)
        .args(["discharge", "--degrees", "5", "--rules"])
        .arg(fixtures().join("toy.rules"))
        .arg("--configs")
        .arg(fixtures().join("unavoidable.conf"))
        .arg("--present")
        .arg(fixtures().join("present"))
        .output()
        .expect("spawn binary");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));

    let oracle = Command::new(exe)
        .args(["oracle", "consistency"])
        .arg(fixtures().join("icosahedron.graph"))
        .output()
        .expect("spawn binary");
    assert!(oracle.status.success());
}
