use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyval")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

struct Files(TempDir);

impl Files {
    fn new() -> Self {
        Files(tempfile::tempdir().unwrap())
    }

    fn write(&self, name: &str, body: &str) -> String {
        let path: PathBuf = self.0.path().join(name);
        std::fs::write(&path, body).unwrap();
        path.to_string_lossy().into_owned()
    }
}

#[test]
fn info_on_triangle() {
    let files = Files::new();
    let t2 = files.write("t2.json", r#"{"dim": 2, "vertices": [[0, 0], [1, 0], [0, 1]]}"#);
    let out = run(&["info", &t2]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["facets"].as_array().unwrap().len(), 3);
    assert_eq!(v["volume"], json!("1/2"));
    assert_eq!(v["moment"], json!(["1/6", "1/6"]));
    assert_eq!(v["facets"][2]["cone_volume"], json!("1/2"));
}

#[test]
fn info_on_point_and_bad_files() {
    let files = Files::new();
    let pt = files.write("pt.json", r#"{"dim": 3, "vertices": [["1/2", 0, 7]]}"#);
    let v = stdout_json(&run(&["info", &pt]));
    assert_eq!(v["aff_dim"], json!(0));
    assert_eq!(v["facets"], json!([]));

    let ragged = files.write("bad.json", r#"{"dim": 2, "vertices": [[0, 0], [1]]}"#);
    let out = run(&["info", &ragged]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("ragged"));
    assert_eq!(run(&["info", "/nonexistent/file.json"]).status.code(), Some(2));
}

#[test]
fn compute_valuations() {
    let files = Files::new();
    let t3 = files.write("t3.json", r#"{"dim": 3, "vertices": [[0,0,0],[1,0,0],[0,1,0],[0,0,1]]}"#);
    let v = stdout_json(&run(&["compute", "fv", "--file", &t3]));
    assert_eq!(v["value"], json!(["1/6", "1/6", "1/6"]));
    assert_eq!(v["params"]["zeta"], json!("1"));

    let v = stdout_json(&run(&["compute", "fv", "--file", &t3, "--zeta", "-2/3"]));
    assert_eq!(v["value"], json!(["-1/9", "-1/9", "-1/9"]));

    let seg = files.write("seg.json", r#"{"dim": 2, "vertices": [[-1, 0], [1, 0]]}"#);
    assert_eq!(stdout_json(&run(&["compute", "ve", "--file", &seg]))["value"], json!(["0", "0"]));

    let t2 = files.write("t2.json", r#"{"dim": 2, "vertices": [[0, 0], [1, 0], [0, 1]]}"#);
    assert_eq!(stdout_json(&run(&["compute", "vo", "--file", &t2]))["value"], json!(["1", "-1"]));

    let unit = files.write("e1.json", r#"{"dim": 2, "vertices": [[1, 0]]}"#);
    let v = stdout_json(&run(&["compute", "thm14", "--file", &unit, "--param", "c2_tilde=1"]));
    assert_eq!(v["value"], json!(["0", "2"]));
}

#[test]
fn compute_preconditions() {
    let files = Files::new();
    let far = files.write("far.json", r#"{"dim": 2, "vertices": [[1, 1], [2, 1], [1, 2]]}"#);
    let out = run(&["compute", "vo", "--file", &far]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("origin not contained"));
    assert!(!run(&["compute", "thm12", "--file", &far]).status.success());
    assert_eq!(run(&["compute", "thm13", "--file", &far, "--param", "c9=1"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "fv", "--file", &far, "--zeta", "0.5"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "fv", "--file", &far, "--bogus"]).status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let out = run(&["verify", "minkowski", "--dim", "4", "--cases", "30"]);
    assert!(out.status.success());
    let reports = stdout_json(&out);
    assert_eq!(reports[0]["failures"], json!(0));
    assert_eq!(reports[0]["cases"], json!(30));

    let out = run(&["verify", "negative-controls", "--cases", "30", "--dim", "2"]);
    assert!(out.status.success());
    for r in stdout_json(&out).as_array().unwrap() {
        assert_eq!(r["expected_fail"], json!(true));
        assert!(r["failures"].as_u64().unwrap() > 0);
        assert!(!r["witnesses"].as_array().unwrap().is_empty());
    }

    assert_eq!(run(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "minkowski", "--dim", "7"]).status.code(), Some(2));
}

#[test]
fn verify_all_passes() {
    let out = run(&["verify", "all", "--seed", "1", "--cases", "100", "--dim", "3"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let reports = stdout_json(&out);
    assert!(reports.as_array().unwrap().iter().all(|r| r["failures"] == json!(0)));
}

#[test]
fn output_is_byte_identical() {
    let a = run(&["verify", "contravariance", "--seed", "7", "--cases", "20", "--dim", "2"]);
    let b = run(&["verify", "contravariance", "--seed", "7", "--cases", "20", "--dim", "2"]);
    assert_eq!(a.stdout, b.stdout);
    let files = Files::new();
    let p = files.write("p.json", r#"{"dim": 3, "vertices": [[2,0,0],[0,2,0],[0,0,2],[-1,-1,-1],[0,0,0]]}"#);
    assert_eq!(run(&["info", &p]).stdout, run(&["info", &p]).stdout);
}
