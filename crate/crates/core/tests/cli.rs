use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn offsetdeg(args: &[&str], env: Option<(&str, &str)>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_offsetdeg"));
    cmd.args(args).env_remove("OFFSETDEG_MAX_SECONDS");
    if let Some((k, v)) = env {
        cmd.env(k, v);
    }
    cmd.output().unwrap()
}

fn surface_file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

const HYPERBOLIC: &str = "P1 = t1\nP2 = 2*t2\nP3 = t1^2 - t2^2\n";

#[test]
fn parse_echoes_canonical_form() {
    let o = offsetdeg(&["parse", "-(t2^2)/4 + t1"], None);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "(-t2^2 + 4*t1)/4\n");
    let o = offsetdeg(&["parse", "t1^(-1)"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("negative exponent"));
    assert_eq!(offsetdeg(&["parse", "t1 + d"], None).status.code(), Some(1));
}

#[test]
fn compute_text_report() {
    let f = surface_file(HYPERBOLIC);
    let o = offsetdeg(&["compute", f.path().to_str().unwrap()], None);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("m*delta = 10"));
    assert!(out.contains("[pass] identities"));
    assert!(!out.contains("specialization"));
}

#[test]
fn verify_runs_every_suite() {
    let f = surface_file(HYPERBOLIC);
    let o = offsetdeg(&["verify", f.path().to_str().unwrap(), "--trials", "5", "--format", "json"], None);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"identities") && names.contains(&"specialization"), "{names:?}");
    assert_eq!(v["m_delta"], 10);
    assert!(v["delta"].is_null());
}

#[test]
fn timing_flag_adds_stage_times() {
    let f = surface_file(HYPERBOLIC);
    let o = offsetdeg(&["compute", f.path().to_str().unwrap(), "--format", "json", "--timing"], None);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["timings_ms"].as_object().unwrap().contains_key("resultant"));
}

#[test]
fn usage_and_input_errors_exit_1() {
    assert_eq!(offsetdeg(&["compute", "/nonexistent/surface.txt"], None).status.code(), Some(1));
    let bad = surface_file("P1 = t1\nP2 = 2t2\nP3 = t1\n");
    let o = offsetdeg(&["compute", bad.path().to_str().unwrap(), "--format", "json"], None);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["error"]["kind"], "input");
    let f = surface_file(HYPERBOLIC);
    let o = offsetdeg(&["compute", f.path().to_str().unwrap()], Some(("OFFSETDEG_MAX_SECONDS", "never")));
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(offsetdeg(&["compute", f.path().to_str().unwrap(), "--checks", "some"], None).status.code(), Some(2));
}

#[test]
fn wall_clock_budget_exits_5() {
    // A generic rational quadric: the resultant is far too large for a millisecond.
    let f = surface_file("P1 = t1/2 + t2\nP2 = t1*t2\nP3 = -(t2^2)/4 + t1\nP0 = 3*t1 + 1\n");
    let o = offsetdeg(&["compute", f.path().to_str().unwrap()], Some(("OFFSETDEG_MAX_SECONDS", "0.001")));
    assert_eq!(o.status.code(), Some(5));
    assert!(stderr(&o).contains("budget"));
}

#[test]
fn tracing_index_must_divide() {
    let f = surface_file(&format!("{HYPERBOLIC}m = 4\n"));
    let o = offsetdeg(&["compute", f.path().to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("does not divide"));
}
