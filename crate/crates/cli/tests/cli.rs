use std::process::{Command, Output};

use serde_json::Value;

fn malcev(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_malcev")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn error_of(out: &Output) -> String {
    let v: Value = serde_json::from_slice(&out.stderr).expect("stderr is JSON");
    v["error"].as_str().expect("error message").to_string()
}

#[test]
fn compare_reports_relation_and_witness() {
    let out = malcev(&["compare", "1", "x1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["relation"], "Less");
    assert_eq!(v["witness"]["monomial"], "t1");
    assert_eq!(v["witness"]["a"], "0");
    assert_eq!(v["witness"]["b"], "1");

    let v = json(&malcev(&["compare", "x1", "x1"]));
    assert_eq!(v["relation"], "Equal");
    assert!(v["witness"].is_null());

    assert_eq!(json(&malcev(&["compare", "x2", "x1"]))["relation"], "Less");
}

#[test]
fn unknown_suite_is_an_error() {
    let out = malcev(&["verify", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
    let msg = error_of(&out);
    assert!(msg.contains("nosuch") && msg.contains("order"), "{msg}");
}

#[test]
fn parse_errors_exit_with_two() {
    let out = malcev(&["compare", "x1^", "x1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(error_of(&out).contains("parse error"));
    assert_eq!(malcev(&["d", "[x1"]).status.code(), Some(2));
    assert_eq!(malcev(&["--weights", "1:", "demo-theorem"]).status.code(), Some(2));
}

#[test]
fn series_queries() {
    let v = json(&malcev(&["d", "[x1] + [x2]"]));
    assert_eq!(v["d"], "x2");
    assert_eq!(v["coefficient"], "1");

    let v = json(&malcev(&["membership", "[x1]"]));
    assert_eq!(v["in_n"], true);
    assert_eq!(v["phi_image"], "Id");

    let v = json(&malcev(&["coset", "[x3^-1]"]));
    assert_eq!(v["label"], "H(1 3 2)");
}

#[test]
fn invert_reports_guarantee_and_bounds() {
    let v = json(&malcev(&["invert", "--terms", "2", "[1] + [x1]"]));
    assert_eq!(v["inverse"]["guarantee"], "x1^3");
    assert_eq!(v["inverse"]["terms"].as_array().map(Vec::len), Some(3));
    assert_eq!(v["left_residual_bound"], "x1^3");
    assert_eq!(v["right_residual_bound"], "x1^3");
}

#[test]
fn eval_in_each_target() {
    let v = json(&malcev(&["eval", "?x*a*?x^-1*a^-1", "-b", "x=x1^2", "-b", "a=x1^-1"]));
    assert_eq!(v["value"], "1");
    let out = malcev(&["eval", "--in", "s3", "?x^6*?y^6*?x^-6*?y^-6", "-b", "x=x2", "-b", "y=x1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn verify_passes_and_is_deterministic() {
    let args = ["--samples", "40", "--seed", "3", "verify", "order"];
    let (a, b) = (malcev(&args), malcev(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["passed"], true);
    assert_eq!(v["reports"][0]["suite"], "order");
}

#[test]
fn small_sample_runs_of_every_suite_pass() {
    let out = malcev(&["--samples", "5", "verify", "all"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn config_file_is_read() {
    let dir = std::env::temp_dir().join(format!("malcev-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("run.toml");
    std::fs::write(&path, "seed = 11\nweights = {1 = 2}\nx = \"x1^2*x2\"\n[samples]\ndemo = 30\n").unwrap();
    let out = malcev(&["--config", path.to_str().unwrap(), "demo-theorem"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["seed"], 11);
    assert_eq!(v["samples"], 30);
    assert_eq!(v["lambda"], 3);
    assert_eq!(v["x_image"], "Id");

    std::fs::write(&path, "seed = \"eleven\"\n").unwrap();
    assert_eq!(malcev(&["--config", path.to_str().unwrap(), "demo-theorem"]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}
