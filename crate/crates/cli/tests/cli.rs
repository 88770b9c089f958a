use std::process::Command;

use serde_json::{json, Value};

fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_schubert")).args(args).output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).expect("utf-8");
    let doc = serde_json::from_str(stdout.trim()).unwrap_or_else(|e| panic!("not one JSON object ({e}): {stdout}"));
    (out.status.code().expect("exit code"), doc)
}

#[test]
fn tau_example() {
    let (code, doc) = run(&["tau", "--gcm", "A2", "--w", "1 2", "--phi", "1"]);
    assert_eq!(code, 0);
    assert_eq!(doc, json!({"tau_plus": "1", "tau_minus": "1 2", "l_plus": 1, "l_minus": 2}));
}

#[test]
fn tau_brute_mode_agrees() {
    let (_, rec) = run(&["tau", "--gcm", "G2", "--w", "1 2 1 2", "--phi", "2 1"]);
    let (_, brute) = run(&["tau", "--gcm", "G2", "--w", "1 2 1 2", "--phi", "2 1", "--mode", "brute"]);
    assert_eq!(rec, brute);
}

#[test]
fn singular_chamber_is_an_error_object() {
    let (code, doc) = run(&["chamber", "--gcm", "A2", "--lambda", "-1,5"]);
    assert_eq!(code, 1);
    assert_eq!(doc["error"]["code"], "singular");
}

#[test]
fn chamber_reports_phi_and_image() {
    let (code, doc) = run(&["chamber", "--gcm", "A2", "--lambda", "-3,0"]);
    assert_eq!(code, 0);
    assert_eq!(doc["length"], 2);
    assert_eq!(doc["dominant_image"], json!([0, 0]));
}

#[test]
fn predict_example() {
    let (code, doc) = run(&["predict", "--gcm", "A2", "--w", "1 2 1", "--phi", "1"]);
    assert_eq!(code, 0);
    assert_eq!(doc["h0"], false);
    assert_eq!(doc["top"], false);
    assert_eq!(doc["upper"], 1);
    assert_eq!(doc["lower"], 1);
    assert_eq!(doc["margins_required"]["upper"]["rule"], "l(phi)*M");
}

#[test]
fn resolve_example() {
    let (code, doc) = run(&["resolve", "--gcm", "A2", "--w", "1", "--lambda", "-3,5"]);
    assert_eq!(code, 0);
    assert_eq!(doc["outcome"], "resolved");
    assert_eq!(doc["degree"], 1);
    assert!(doc["character"].is_array());
    assert_eq!(doc["steps"][0]["rule"], "shift");
}

#[test]
fn enumerate_counts() {
    let (code, doc) = run(&["enumerate", "--gcm", "B2", "--max-length", "9"]);
    assert_eq!(code, 0);
    assert_eq!(doc["counts"], json!([1, 2, 2, 2, 1]));
    assert_eq!(doc["total"], 8);
    assert_eq!(doc["elements"][0]["word"], "");
}

#[test]
fn malformed_input_exits_two() {
    for args in [
        &["tau", "--gcm", "A2", "--w", "1 x", "--phi", ""][..],
        &["tau", "--gcm", "A2", "--w", "3", "--phi", ""],
        &["resolve", "--gcm", "A2", "--w", "1", "--lambda", "1,2,3"],
        &["chamber", "--gcm", "no-such-file.json", "--lambda", "0"],
    ] {
        let (code, doc) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(doc["error"]["code"].is_string(), "{args:?}");
    }
}

#[test]
fn gcm_from_file() {
    let path = std::env::temp_dir().join(format!("schubert-cli-test-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"name": "B2 copy", "matrix": [[2, -1], [-2, 2]]}"#).unwrap();
    let (code, doc) = run(&["enumerate", "--gcm", path.to_str().unwrap(), "--max-length", "5"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 0);
    assert_eq!(doc["total"], 8);
}

#[test]
fn verify_identity_only() {
    let (code, doc) = run(&["verify", "--suite", "weyl", "--gcm", "A2", "--max-length", "0"]);
    assert_eq!(code, 0);
    assert_eq!(doc["instances"], 1);
    assert_eq!(doc["passed"], 1);
}

#[test]
fn verify_relative_a2() {
    let (code, doc) = run(&["verify", "--suite", "relative", "--gcm", "A2", "--max-length", "6", "--seed", "7"]);
    assert_eq!(code, 0);
    assert_eq!(doc["violations"], json!([]));
    assert_eq!(doc["passed"], doc["instances"]);
}

#[test]
fn verify_all_affine() {
    let (code, doc) = run(&["verify", "--suite", "all", "--gcm", "A1~", "--max-length", "8", "--seed", "1"]);
    assert_eq!(code, 0, "{}", doc["violations"]);
    let (instances, passed, indeterminate) =
        (doc["instances"].as_u64().unwrap(), doc["passed"].as_u64().unwrap(), doc["indeterminate"].as_u64().unwrap());
    assert_eq!(passed + indeterminate, instances);
    assert!(doc["margin_rules"].is_array());
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--suite", "all", "--gcm", "B2", "--max-length", "3", "--seed", "11"];
    let strip = |mut v: Value| {
        v["wall_time_ms"] = json!(0);
        for p in v["parts"].as_array_mut().unwrap() {
            p["wall_time_ms"] = json!(0);
        }
        v
    };
    assert_eq!(strip(run(&args).1), strip(run(&args).1));
}

#[test]
fn table_format_is_text() {
    let out = Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(["--format", "table", "tau", "--gcm", "A2", "--w", "1 2", "--phi", "1"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("tau_minus") && text.contains("1 2"), "{text}");
    assert!(serde_json::from_str::<Value>(&text).is_err());
}
