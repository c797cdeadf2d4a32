use std::process::{Command, Output};

use serde_json::{json, Value};

fn hecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke")).args(args).env_remove("HECKE_KL_CACHE_DIR").output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn kl_table_for_s2() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let v = stdout_json(&hecke(&["kl-poly", "-n", "2", "--table", "--cache-dir", d]));
    assert_eq!(
        v,
        json!({
            "n": 2,
            "count": 3,
            "entries": [
                { "y": "1", "w": "1", "h": [[0, 1]] },
                { "y": "1", "w": "s", "h": [[1, 1]] },
                { "y": "s", "w": "s", "h": [[0, 1]] },
            ]
        })
    );
    assert!(dir.path().join("kl-n2.bin").exists());
    assert!(dir.path().join("kl-n2.json").exists());
    let again = stdout_json(&hecke(&["kl-poly", "-n", "2", "--table", "--cache-dir", d]));
    assert_eq!(again, v);
}

#[test]
fn single_polynomial() {
    let out = hecke(&["kl-poly", "-n", "4", "--y", "id", "--w", "tsut"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "v^2 + v^4");
    let v = stdout_json(&hecke(&["--json", "kl-poly", "-n", "4", "--y", "1", "--w", "tsut"]));
    assert_eq!(v["h"], json!([[2, 1], [4, 1]]));
}

#[test]
fn usage_errors_exit_with_2() {
    assert_eq!(hecke(&["kl-poly", "-n", "9", "--table"]).status.code(), Some(2));
    assert_eq!(hecke(&["kl-poly", "-n", "3"]).status.code(), Some(2));
    assert_eq!(hecke(&["schutz", "-n", "3", "--w", "sq"]).status.code(), Some(2));
    assert_eq!(hecke(&["idempotent", "-n", "3", "--path", "1;1,1"]).status.code(), Some(2));
    assert_eq!(hecke(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(hecke(&["verify", "--level", "slow"]).status.code(), Some(2));
}

#[test]
fn schutzenberger_image() {
    let out = hecke(&["schutz", "-n", "3", "--w", "s"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ts");
}

#[test]
fn idempotent_for_column_of_two() {
    let v = stdout_json(&hecke(&["idempotent", "-n", "2", "--path", "1;1,1"]));
    assert_eq!(v["gamma"], json!([[-2, 1], [2, -1]]));
    assert_eq!(v["kT"]["terms"], json!([[[2, 1], [[-1, 1], [1, -1]]]]));
    for key in ["T", "pT", "path"] {
        assert!(v.get(key).is_some(), "missing {}", key);
    }
}

#[test]
fn complex_shape_of_st() {
    let v = stdout_json(&hecke(&["complex-shape", "-n", "3", "--w", "st"]));
    assert_eq!(v["w"], "st");
    assert_eq!(v["degrees"]["0"], json!([["st", 0, 1]]));
    assert_eq!(v["degrees"]["2"], json!([["1", 2, 1]]));
}

#[test]
fn twist_expansion_is_deterministic() {
    let a = hecke(&["twist-expand", "-n", "3", "ht"]);
    let b = hecke(&["twist-expand", "-n", "3", "ht"]);
    assert_eq!(a.stdout, b.stdout);
    let v = stdout_json(&a);
    assert_eq!(v["terms"].as_array().unwrap().len(), 6);
}

#[test]
fn cells_of_s3() {
    let v = stdout_json(&hecke(&["cells", "-n", "3"]));
    assert_eq!(v["cells"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_reports_known_failures() {
    let out = hecke(&["--json", "verify", "--level", "fast", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let failed: Vec<u64> = v["criteria"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["status"] == "FAIL")
        .map(|r| r["id"].as_u64().unwrap())
        .collect();
    assert_eq!(failed, vec![3, 8]);
}
