use std::path::Path;
use std::process::{Command, Output};

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gorenstein-lab"))
        .args(args)
        .env_remove("GORENSTEIN_LAB_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn hf_of_normal_form() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "f.txt", "X*U^4 + Y*U^3*V + Z*U^2*V^2\n");
    let out = lab(&["hf", "--form", &path]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1,5,6,6,5,1");
}

#[test]
fn hf_of_pure_power_with_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "f.txt", "# vars: U\nU^6\n");
    let out = lab(&["hf", "--form", &path, "--json", "-"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("1,1,1,1,1,1,1\n"));
    let value: serde_json::Value = serde_json::from_str(&text["1,1,1,1,1,1,1\n".len()..]).unwrap();
    assert_eq!(value["socle_degree"], 6);
    assert_eq!(value["bases"]["3"][0], "u^3");
}

#[test]
fn malformed_form_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "bad.txt", "X*U^4 +\n  Y*U^^3\n");
    let out = lab(&["hf", "--form", &path]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bad.txt:2:"), "{err}");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(lab(&["reproduce", "--only", "no-such-check"]).status.code(), Some(2));
    assert_eq!(lab(&["survey", "--d", "4"]).status.code(), Some(2));
    assert_eq!(lab(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn jordan_and_hessian() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "f.txt", "X*U^4 + Y*U^3*V + Z*U^2*V^2\n");
    let out = lab(&["jordan", "--form", &path, "--ell", "u + v", "--strings"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "(5^2,4^2,3^2)");

    let out = lab(&["hessian", "--form", &path, "--order", "1"]);
    assert_eq!(stdout(&out).trim(), "zero");
    let out = lab(&["hessian", "--form", &path, "--order", "0", "--at", "1,0,0,1,0"]);
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn normal_form_and_hf_check() {
    let out = lab(&["normal-form", "--variant", "iii", "--d", "6", "--lambda", "-3"]);
    assert!(out.status.success());
    assert!(stdout(&out).ends_with("1,5,6,6,6,5,1\n"));

    let out = lab(&["hf-check", "--vector", "1,5,6,8,6,5,1"]);
    assert!(stdout(&out).contains("known_impossible: true"));
}

#[test]
fn surveys_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let out = lab(&["--seed", "7", "--samples", "30", "survey", "--d", "5", "--json", path.to_str().unwrap()]);
        assert!(out.status.success());
        std::fs::read(path).unwrap()
    };
    let a = run("a.json");
    assert_eq!(a, run("b.json"));
    let value: serde_json::Value = serde_json::from_slice(&a).unwrap();
    let hist = value[0]["histogram"].as_object().unwrap();
    assert!(hist.keys().all(|k| k == "1,5,6,6,5,1" || k == "1,5,7,7,5,1"), "{hist:?}");
}

#[test]
fn classify_is_deterministic_and_seed_dependent() {
    let run = |seed: &str| stdout(&lab(&["--seed", seed, "--samples", "20", "classify-perazzo", "--d", "6", "--json", "-"]));
    let a = run("3");
    assert_eq!(a, run("3"));
    assert!(!a.contains("1,5,7,7,7,5,1"));
}

#[test]
fn reproduce_filters_checks() {
    let out = lab(&["--d-max", "6", "reproduce", "--only", "jordan-table", "--only", "dominance-chain"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2, "{text}");
    assert!(lines[0].starts_with("[PASS] jordan-table"));
    assert!(lines[1].starts_with("[PASS] dominance-chain"));
}
