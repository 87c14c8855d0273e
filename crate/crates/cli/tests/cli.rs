use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_epsymp"))
}

fn run(dir: &Path, args: &[&str]) -> Output {
    bin().current_dir(dir).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

const SHEAR: &str = "n 2\n1 0 0 0\n0 1 0 0\n0 0.1 1 0\n0 0 0 1\n";
const SMALL: &str = "# shrinks the first plane\nn 2\n0.1 0 0 0\n0 0.1 0 0\n0 0 1 0\n0 0 0 1\n";

#[test]
fn analyze_reports_the_shear_defect() {
    let dir = TempDir::new().unwrap();
    write(&dir, "shear.txt", SHEAR);
    let out = run(dir.path(), &["analyze", "shear.txt", "--eps", "0.1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let dfct = v["report"]["defect"].as_f64().unwrap();
    assert!((dfct - 0.1).abs() < 1e-12);
    assert_eq!(v["report"]["withinEps"], Value::Bool(true));
    assert_eq!(v["report"]["invariants"]["classification"], "symplectic-like");
    assert_eq!(v["pass"], Value::Bool(true));
    assert_eq!(v["inputsDigest"].as_str().unwrap().len(), 64);
}

#[test]
fn certify_rejects_a_small_plane_and_accepts_a_symplectic_map() {
    let dir = TempDir::new().unwrap();
    write(&dir, "small.txt", SMALL);
    let out = run(dir.path(), &["certify", "small.txt", "--eps", "0", "--trials", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["pass"], Value::Bool(false));

    write(&dir, "swap.txt", "n 1\n0 -1\n1 0\n");
    let out = run(dir.path(), &["certify", "swap.txt", "--eps", "0", "--trials", "5"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn certify_passes_for_an_eps_symplectic_map() {
    let dir = TempDir::new().unwrap();
    let phi = epsymp::random::random_eps_symplectic(2, 0.05, 1).unwrap();
    write(&dir, "phi.txt", &epsymp::io::format_matrix(&phi));
    let eps = format!("{}", std::f64::consts::SQRT_2 * 0.05);
    let out = run(dir.path(), &["certify", "phi.txt", "--eps", &eps, "--trials", "20"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn symplectify_writes_psi_and_fails_above_eps() {
    let dir = TempDir::new().unwrap();
    write(&dir, "scale.txt", "n 1\n1.1 0\n0 1.1\n");
    let out = run(
        dir.path(),
        &["symplectify", "scale.txt", "--eps", "0.25", "--psi", "psi.txt"],
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let psi = epsymp::io::parse_matrix(&std::fs::read_to_string(dir.path().join("psi.txt")).unwrap())
        .unwrap();
    assert!((psi[(0, 0)] - 1.0 / 1.1).abs() < 1e-9);
    assert_eq!(json(&out)["report"]["steps"], 1000);

    let out = run(dir.path(), &["symplectify", "scale.txt", "--eps", "0.1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds"));
}

#[test]
fn bounds_prints_the_constants() {
    let dir = TempDir::new().unwrap();
    let out = run(dir.path(), &["bounds", "--eps", "0.1", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let r = &v["report"];
    assert!((r["rhoNonlinear"].as_f64().unwrap() - 0.737157287525381).abs() < 1e-12);
    assert!((r["z0"]["bisection"].as_f64().unwrap() - 0.894107456974982).abs() < 1e-12);
    assert!(r["rigidity"]["value"].as_f64().unwrap() > 0.0);

    let out = run(dir.path(), &["bounds", "--eps", "0.3", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn homotopy_returns_a_primitive_and_bound_margins() {
    let dir = TempDir::new().unwrap();
    // x2 dx1 - x1 dx2 is not closed; the identity still holds
    write(
        &dir,
        "f.json",
        r#"{"m":2,"k":1,"terms":[
            {"index":[1],"poly":[{"exp":[0,1],"num":"1","den":"1"}]},
            {"index":[2],"poly":[{"exp":[1,0],"num":"-1","den":"1"}]}]}"#,
    );
    write(&dir, "pts.json", "[[0.5, 0.25], [-1, 0], [0, 0]]");
    let out = run(dir.path(), &["homotopy", "f.json", "--points", "pts.json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["report"]["identity"], Value::Bool(true));
    assert_eq!(v["report"]["closed"], Value::Bool(false));
    assert_eq!(v["report"]["bounds"]["points"].as_array().unwrap().len(), 3);

    // d(x1 x2) = x2 dx1 + x1 dx2 is closed; h recovers x1 x2
    write(
        &dir,
        "g.json",
        r#"{"m":2,"k":1,"terms":[
            {"index":[1],"poly":[{"exp":[0,1],"num":"1","den":"1"}]},
            {"index":[2],"poly":[{"exp":[1,0],"num":"1","den":"1"}]}]}"#,
    );
    let out = run(dir.path(), &["homotopy", "g.json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["report"]["primitive"], Value::Bool(true));
    assert_eq!(v["report"]["hText"], "x1·x2");
}

#[test]
fn input_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    write(&dir, "bad.txt", "n 2\n1 0\n");
    write(&dir, "odd.txt", "n 3\n1 0 0\n0 1 0\n0 0 1\n");
    write(&dir, "top.json", r#"{"m":2,"k":2,"terms":[]}"#);
    for args in [
        vec!["analyze", "missing.txt"],
        vec!["analyze", "bad.txt"],
        vec!["analyze", "odd.txt"],
        vec!["certify", "odd.txt", "--eps", "0.1"],
        vec!["homotopy", "top.json"],
        vec!["suite", "--scale", "huge"],
        vec!["frobnicate"],
    ] {
        let out = run(dir.path(), &args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
    write(&dir, "id.txt", "n 1\n1 0\n0 1\n");
    let out = run(dir.path(), &["certify", "id.txt", "--eps", "0.8"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    write(&dir, "shear.txt", SHEAR);
    for args in [
        vec!["certify", "shear.txt", "--eps", "0.15", "--trials", "10", "--seed", "9"],
        vec!["symplectify", "shear.txt", "--eps", "0.1", "--step", "0.01"],
        vec!["suite", "--seed", "3"],
    ] {
        let a = run(dir.path(), &args);
        let b = run(dir.path(), &args);
        assert!(!a.stdout.is_empty());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let a = run(dir.path(), &["suite", "--seed", "3"]);
    let b = run(dir.path(), &["suite", "--seed", "4"]);
    assert_ne!(json(&a)["inputsDigest"], json(&b)["inputsDigest"]);
}

#[test]
fn out_flag_and_text_format() {
    let dir = TempDir::new().unwrap();
    write(&dir, "shear.txt", SHEAR);
    let out = run(dir.path(), &["analyze", "shear.txt", "--out", "r.json"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(v["command"][0], "analyze");

    let out = run(dir.path(), &["analyze", "shear.txt", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("defect            0.100000000000"));
    assert!(text.trim_end().ends_with("PASS"));
}
