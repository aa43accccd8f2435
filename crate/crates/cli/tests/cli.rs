use std::process::{Command, Output};

fn a6ext(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_a6ext"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn all_json_reports_surviving_extension() {
    let o = a6ext(&["all", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "M10_2");
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn decompose_prints_multiplicities() {
    let o = a6ext(&["decompose"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(1,1,0,0,1,0)"));
}

#[test]
fn chartab_prints_irrational_entries() {
    let o = a6ext(&["chartab"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("(1-sqrt5)/2"));
    assert!(s.contains("(1+sqrt5)/2"));
}

#[test]
fn output_is_deterministic() {
    let a = a6ext(&["all", "--format", "json"]);
    let b = a6ext(&["all", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(a6ext(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(a6ext(&["all", "--format", "yaml"]).status.code(), Some(2));
}

#[test]
fn out_writes_file() {
    let path = std::env::temp_dir().join(format!("a6ext-lattice-{}.json", std::process::id()));
    let o = a6ext(&["lattice", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(v["checks"].as_array().unwrap().len() >= 4);
}

#[test]
fn unwritable_out_is_runtime_error() {
    let o = a6ext(&["lattice", "--out", "/nonexistent-dir/x/report.txt"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}
