use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dyckroots"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema() -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/report.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

/// Runs a verify command, checks the exit code and the schema, and returns
/// the parsed report.
fn report(args: &[&str], code: i32) -> Value {
    let o = run(args);
    assert_eq!(
        o.status.code(),
        Some(code),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let errors: Vec<String> = schema().iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{args:?}: {errors:?}");
    v
}

#[test]
fn triangle_examples() {
    let o = run(&["triangle", "--n", "3", "--source", "oracle", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n,k,m,value\n3,1,1,1\n3,2,1,3\n3,3,0,1\n");
    let o = run(&["triangle", "--n", "1", "--source", "formula"]);
    assert_eq!(stdout(&o), "n,k,m,value\n1,1,0,1\n");
}

#[test]
fn every_source_gives_the_same_table() {
    for n in ["0", "4", "9", "12"] {
        let tables: Vec<String> = ["oracle", "formula", "rec-k", "rec-n"]
            .iter()
            .map(|s| stdout(&run(&["triangle", "--n", n, "--source", s])))
            .collect();
        assert!(tables.windows(2).all(|w| w[0] == w[1]), "n = {n}");
    }
}

#[test]
fn caps_refuse_with_exit_2() {
    let o = run(&["triangle", "--n", "17", "--source", "oracle"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--unsafe-no-cap"));
    assert_eq!(run(&["triangle", "--n", "201"]).status.code(), Some(2));
    assert_eq!(
        run(&["triangle", "--n", "201", "--unsafe-no-cap"]).status.code(),
        Some(0)
    );
    // packed paths stop at semilength 32 even without caps
    let o = run(&["triangle", "--n", "33", "--source", "oracle", "--unsafe-no-cap"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        run(&["verify", "sturm-k", "--k", "x", "--n-max", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "sturm-k", "--k", "5", "--n-max", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "realroots", "--n-min", "5", "--n-max", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "liu-wang-n", "--n", "2"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "realroots", "--n-max", "3", "--format", "csv"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["poly", "--n", "3", "--k", "4"]).status.code(), Some(2));
    assert_eq!(run(&["roots", "--n", "3", "--k", "0"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}

#[test]
fn verify_examples_pass() {
    let v = report(&["verify", "sturm-k", "--k", "2", "--n-max", "12"], 0);
    assert_eq!(v["status"], "Pass");
    assert_eq!(v["command"], "verify sturm-k");

    let v = report(&["verify", "unimodal-n", "--n", "10"], 0);
    let summary = v["details"].as_array().unwrap().last().unwrap();
    assert_eq!(summary["check"], "sturm-unimodal");
    assert_eq!(summary["info"]["peaks"], serde_json::json!([5]));

    let v = report(&["verify", "realroots", "--n-max", "20"], 0);
    assert_eq!(v["details"].as_array().unwrap().len(), 231);
}

#[test]
fn every_target_reports_against_the_schema() {
    let cases: &[&[&str]] = &[
        &["verify", "samezeros", "--n-max", "12"],
        &["verify", "symmetry", "--k-max", "8"],
        &["verify", "liu-wang-k", "--k", "1..4", "--n-max", "14"],
        &["verify", "liu-wang-n", "--n", "3..16"],
        &["verify", "rec-agree", "--n-max", "25"],
        &["verify", "oracle-agree", "--n-max", "10"],
        &["verify", "unimodal-n", "--n", "1..12"],
        &["verify", "sturm-k", "--k", "1..=4", "--n-max", "10"],
    ];
    for args in cases {
        let v = report(args, 0);
        assert_eq!(v["status"], "Pass", "{args:?}");
        assert!(!v["details"].as_array().unwrap().is_empty());
    }
}

#[test]
fn reports_are_deterministic_across_jobs_and_seeds() {
    let args = ["verify", "unimodal-n", "--n", "1..14"];
    let base = stdout(&run(&args));
    for extra in [
        &["--jobs", "1"][..],
        &["--jobs", "4", "--seed", "7"],
        &["--seed", "123"],
    ] {
        let mut a = args.to_vec();
        a.extend_from_slice(extra);
        assert_eq!(stdout(&run(&a)), base, "{extra:?}");
    }
    // timing is the only field that may differ, and only when asked for
    let mut a = args.to_vec();
    a.push("--timing");
    let mut v: Value = serde_json::from_str(&stdout(&run(&a))).unwrap();
    assert!(v["timing_ms"].is_u64());
    v.as_object_mut().unwrap().remove("timing_ms");
    assert_eq!(v, serde_json::from_str::<Value>(&base).unwrap());
}

#[test]
fn roots_examples() {
    let o = run(&["roots", "--n", "4", "--k", "2"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let exact: Vec<&str> = v["roots"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["exact"].as_str().unwrap())
        .collect();
    assert_eq!(exact, ["-2/1", "0/1"]);
    let a = stdout(&run(&["roots", "--n", "5", "--k", "2", "--format", "csv"]));
    let b = stdout(&run(&["roots", "--n", "5", "--k", "3", "--format", "csv"]));
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&stdout(&run(&["roots", "--n", "3", "--k", "3"]))).unwrap();
    assert!(v["roots"].as_array().unwrap().is_empty());
}

#[test]
fn poly_and_paths() {
    let o = run(&["poly", "--n", "6", "--k", "2", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    // W_{6,2} = 6x + 9x^2
    assert_eq!(v["coeffs"], serde_json::json!(["0", "6", "9"]));
    let o = run(&["poly", "--n", "6", "--k", "2", "--source", "rec-n"]);
    assert_eq!(stdout(&o), "n,k,m,value\n6,2,1,6\n6,2,2,9\n");

    let o = run(&["paths", "--n", "3"]);
    assert_eq!(
        stdout(&o),
        "path,k,m\nUUUDDD,1,1\nUUDUDD,2,1\nUUDDUD,2,1\nUDUUDD,2,1\nUDUDUD,3,0\n"
    );
    let o = run(&["paths", "--n", "4", "--k", "2", "--m", "2", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    // w_{4,2,2} = C(4,1) C(1,1) C(2,2) / 2 = 2
    assert_eq!(v["count"], 2);
    let o = run(&["paths", "--n", "10", "--limit", "3"]);
    assert_eq!(stdout(&o).lines().count(), 4);
}

#[test]
fn out_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("dyckroots-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.csv");
    let o = run(&["triangle", "--n", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "n,k,m,value\n2,1,1,1\n2,2,0,1\n"
    );
    std::fs::remove_dir_all(&dir).unwrap();
}
