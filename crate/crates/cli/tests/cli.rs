use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn a2zeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_a2zeta"))
        .args(args)
        .env_remove("A2ZETA_THREADS")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn build_q2() {
    let o = a2zeta(&["build", "--q", "2"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let c = json(&o);
    assert_eq!(c["q"], 2);
    assert_eq!(c["vertices"].as_array().unwrap().len(), 1);
    assert_eq!(c["edges"].as_array().unwrap().len(), 14);
    // one entry per rotation of each of the 7 chambers
    assert_eq!(c["chambers"].as_array().unwrap().len(), 21);
}

#[test]
fn unsupported_q_and_bad_usage() {
    for q in ["5", "3"] {
        let o = a2zeta(&["build", "--q", q]);
        assert_eq!(code(&o), 1);
        assert!(o.stdout.is_empty());
    }
    assert_eq!(code(&a2zeta(&["build"])), 1);
    assert_eq!(code(&a2zeta(&["check", "bogus"])), 1);
    assert_eq!(code(&a2zeta(&["check", "trace", "--n-max", "0"])), 1);
    assert_eq!(code(&a2zeta(&["--help"])), 0);
}

#[test]
fn check_all_report_shape() {
    let o = a2zeta(&["check", "all", "--complex", "q2-z3", "--rep", "permutation", "--n-max", "4"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r = json(&o);
    for key in ["q", "d", "N", "chi", "P0", "P1", "P2", "degrees", "checks", "verdicts"] {
        assert!(r.get(key).is_some(), "missing {key}");
    }
    assert_eq!(r["d"], 3);
    assert_eq!(r["N"], serde_json::json!([1, 7, 7]));
    assert_eq!(r["P0"], serde_json::json!(["1", "0", "0", "-73", "0", "0", "584", "0", "0", "-512"]));
    let checks = &r["checks"];
    assert_eq!(checks["main_identity"], true);
    assert_eq!(checks["functional"], true);
    assert_eq!(checks["thm14"], serde_json::json!([true, true, true]));
    assert_eq!(checks["trace"].as_object().unwrap().len(), 4);
    assert!(r["verdicts"].as_array().unwrap().iter().all(|v| v["passed"] == true));
}

#[test]
fn tampered_report_fails_identity() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    let o = a2zeta(&["check", "identity", "--out", p(&good)]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&a2zeta(&["check", "identity", "--report", p(&good)])), 0);

    let mut r: Value = serde_json::from_str(&std::fs::read_to_string(&good).unwrap()).unwrap();
    let c = r["P1"][1].as_str().unwrap().parse::<i64>().unwrap();
    r["P1"][1] = Value::String((c + 1).to_string());
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r.to_string()).unwrap();
    let o = a2zeta(&["check", "identity", "--report", p(&bad)]);
    assert_eq!(code(&o), 3);
    assert_eq!(json(&o)["checks"]["main_identity"], false);
}

#[test]
fn broken_face_map_fails_validation() {
    let dir = tempfile::tempdir().unwrap();
    let mut c = json(&a2zeta(&["build", "--q", "2"]));
    let other = c["chambers"][1]["e12"].clone();
    c["chambers"][0]["e12"] = other;
    let path = dir.path().join("broken.json");
    std::fs::write(&path, c.to_string()).unwrap();
    let o = a2zeta(&["check", "all", "--complex", p(&path)]);
    assert_eq!(code(&o), 2);
    let stderr = String::from_utf8_lossy(&o.stderr);
    assert!(stderr.contains("FAIL"), "{stderr}");
    assert_eq!(json(&o)["checks"]["structure"], false);
    assert_eq!(code(&a2zeta(&["lfun", "--complex", p(&path)])), 2);
}

#[test]
fn representation_files() {
    let dir = tempfile::tempdir().unwrap();
    let z3 = dir.path().join("z3.json");
    let o = a2zeta(&["build", "--q", "2", "--rep", p(&data("z3_permutation.json")), "--out", p(&z3)]);
    assert_eq!(code(&o), 0);
    let a = a2zeta(&["lfun", "--complex", p(&z3), "--rep", "permutation"]);
    let b = a2zeta(&["lfun", "--complex", "q2-z3", "--rep", "permutation"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);

    let o = a2zeta(&["check", "identity", "--complex", p(&z3), "--rep", p(&data("z3_rotation.json"))]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["d"], 2);

    let o = a2zeta(&["lfun", "--complex", "q2", "--rep", p(&data("z3_rotation.json"))]);
    assert_eq!(code(&o), 1);
}

#[test]
fn cover_build() {
    let o = a2zeta(&["build", "--q", "2", "--cover", p(&data("z3_permutation.json"))]);
    assert_eq!(code(&o), 0);
    let c = json(&o);
    assert_eq!(c["vertices"].as_array().unwrap().len(), 3);
    assert_eq!(c["chambers"].as_array().unwrap().len(), 63);
}

#[test]
fn deterministic_across_thread_counts() {
    let args = ["lfun", "--complex", "q2-z3", "--rep", "regular", "--format", "json"];
    let default = a2zeta(&args);
    let one = Command::new(env!("CARGO_BIN_EXE_a2zeta"))
        .args(args)
        .env("A2ZETA_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(code(&one), 0);
    assert_eq!(default.stdout, one.stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_a2zeta"))
        .args(args)
        .env("A2ZETA_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(code(&bad), 1);
}
