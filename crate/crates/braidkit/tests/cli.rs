use std::process::{Command, Output};

fn braidkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidkit")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn check_standard_preset_passes() {
    let o = braidkit(&["check", "--preset", "su2-euclidean"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("[pass] reality"));
}

#[test]
fn check_file_with_gauge() {
    let o = braidkit(&["check", &data("su2.json"), "--gauge", "euclidean"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("x.x = (q^2+1)*x1.x4 + (-q-q^-1)*x2.x3"));
}

#[test]
fn small_file_alone_is_its_own_pair() {
    let o = braidkit(&["check", "--rmatrix", &data("su2.json")]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn missing_and_malformed_files_are_usage_errors() {
    assert_eq!(braidkit(&["check", "/nonexistent.json"]).status.code(), Some(2));
    let tmp = std::env::temp_dir().join("braidkit-cli-bad.json");
    std::fs::write(&tmp, "{\"n\": 2,\n \"entries\": [}").unwrap();
    let o = braidkit(&["check", tmp.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn act_prints_reduced_result() {
    let o = braidkit(&["act", "c1", "x1.x4", "--preset", "su2-euclidean"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(-q)*x1.x1.x4 + (-q^2)*x1.x2.x3");
    let o = braidkit(&["act", "p4", "x4.x4", "--preset", "su2-euclidean", "--q1"]);
    assert_eq!(stdout(&o).trim(), "(-2)*x4");
}

#[test]
fn conjugate_and_spinorial_need_c() {
    assert_eq!(braidkit(&["act", "p1", "x1", "--preset", "su2-euclidean", "--conjugate"]).status.code(), Some(2));
    let o = braidkit(&["act", "c1", "x4", "--preset", "su2-euclidean", "--spinorial"]);
    let p = braidkit(&["act", "c1", "x4", "--preset", "su2-euclidean"]);
    assert_eq!(stdout(&o), stdout(&p));
    let o = braidkit(&["act", "c1", "x1", "--preset", "su2-minkowski", "--spinorial"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_all_passes_on_standard_preset() {
    let o = braidkit(&["verify", "all", "--preset", "su2-euclidean", "--degree", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 12);
}

#[test]
fn verify_skips_what_does_not_apply() {
    let o = braidkit(&["verify", "all", "--preset", "identity", "--degree", "2"]);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("skipped metric"), "{err}");
    assert!(err.contains("skipped star"), "{err}");
}

#[test]
fn example_table_reports_the_discrepancy() {
    let o = braidkit(&["verify", "example-table", "--preset", "su2-euclidean"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("8/16"), "{}", stdout(&o));
}

#[test]
fn check_reports_yang_baxter_residual() {
    let o = braidkit(&["check", &data("not_ybe.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[fail] ybe"), "{}", stdout(&o));
    assert!(stdout(&o).contains("residual[row"), "{}", stdout(&o));
}

#[test]
fn defaults_to_the_standard_preset() {
    let o = braidkit(&["act", "p1", "x1"]);
    assert_eq!(stdout(&o).trim(), "-1");
    let o = braidkit(&["verify", "conjugation", "--degree", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
