use std::process::{Command, Output};

use serde_json::Value;

fn morava(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_morava-bo"))
        .args(args)
        .env_remove("MORAVA_BO_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_all_passes() {
    let o = morava(&["verify-all", "--n", "1", "--q", "3", "--max-degree", "24"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("# verify-all n=1 q=3 max_degree=24 exact=false\n"));
    assert!(out.ends_with("verdict: pass\n"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["basis", "--n", "0", "--q", "1"][..],
        &["basis", "--n", "1", "--q", "0"],
        &["basis", "--n", "1"],
        &["nonsense", "--n", "1", "--q", "1"],
        &["basis", "--n", "1", "--q", "1", "--format", "xml"],
    ] {
        let o = morava(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("Usage:"), "{args:?}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn json_and_csv_agree() {
    let base = ["reconcile", "--n", "2", "--q", "2", "--max-degree", "20"];
    let json = morava(&[&base[..], &["--format", "json"]].concat());
    let csv = morava(&[&base[..], &["--format", "csv"]].concat());
    assert_eq!(json.status.code(), Some(0));
    assert_eq!(csv.status.code(), Some(0));

    let v: Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["params"]["n"], 2);
    assert_eq!(v["verdict"], "pass");
    let rows = v["rows"].as_array().unwrap();

    let text = stdout(&csv);
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let records: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(records.len(), rows.len());
    for (row, rec) in rows.iter().zip(&records) {
        let obj = row.as_object().unwrap();
        assert_eq!(obj.keys().map(String::as_str).collect::<Vec<_>>(), header);
        for (value, field) in obj.values().zip(rec) {
            let flat = match value {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            assert_eq!(&flat, field);
        }
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("basis.json");
    let o = morava(&[
        "basis", "--n", "1", "--q", "2", "--max-degree", "8", "--exact", "--format", "json", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let row8 = v["rows"].as_array().unwrap().iter().find(|r| r["degree"] == 8).unwrap();
    assert_eq!(row8["elements"], serde_json::json!(["c8"]));
}

#[test]
fn cache_from_environment_is_used_and_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["homology", "--n", "1", "--q", "2", "--max-degree", "10", "--format", "json"];
    let cold = morava(&args);
    let run_cached = || {
        Command::new(env!("CARGO_BIN_EXE_morava-bo"))
            .args(args)
            .env("MORAVA_BO_CACHE", dir.path())
            .output()
            .unwrap()
    };
    let first = run_cached();
    assert!(std::fs::read_dir(dir.path()).unwrap().count() >= 10);
    let second = run_cached();
    assert_eq!(cold.stdout, first.stdout);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn coproduct_reports_every_basis_element() {
    let o = morava(&["coproduct", "--n", "1", "--q", "2", "--max-degree", "8", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let elements: Vec<&str> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["element"].as_str().unwrap())
        .collect();
    assert_eq!(elements, ["b2", "b2*b2", "c8"]);
}
