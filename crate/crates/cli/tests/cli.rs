use std::process::Command;

use serde_json::Value;

fn trace3(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_trace3"))
        .args(args)
        .output()
        .expect("runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn json_of(args: &[&str], threads: &str) -> (i32, String) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let mut full: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap();
    full.extend(["--json", p]);
    let out = Command::new(env!("CARGO_BIN_EXE_trace3"))
        .args(&full)
        .env("RAYON_NUM_THREADS", threads)
        .output()
        .expect("runs");
    (
        out.status.code().unwrap_or(-1),
        std::fs::read_to_string(&path).expect("report written"),
    )
}

#[test]
fn relations_find_example() {
    let (code, body) = json_of(
        &[
            "relations",
            "find",
            "--lambda",
            "4,1,1,1",
            "--degree",
            "7",
            "--d",
            "4",
        ],
        "2",
    );
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["nullspace"], serde_json::json!([[12, -15, -20]]));
    assert_eq!(v["matched_paper"], Value::Bool(true));
    assert_eq!(v["lambda"], "4,1,1,1");
    assert!(v.get("wall_ms").is_none());
}

#[test]
fn verify_rejects_non_relation() {
    let (code, out, _) = trace3(&[
        "relations",
        "verify",
        "--lambda",
        "3,2,2",
        "--degree",
        "7",
        "--d",
        "3",
        "--coeffs",
        "1,1,1,1",
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("not a relation"));
    let (code, _, _) = trace3(&[
        "relations",
        "verify",
        "--lambda",
        "3,2,2",
        "--coeffs",
        "2,-1,2,0",
    ]);
    assert_eq!(code, 0);
    let (code, _, err) = trace3(&[
        "relations",
        "verify",
        "--lambda",
        "3,2,2",
        "--coeffs",
        "2,-1",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("length"));
}

#[test]
fn hilbert_kernel_table() {
    let (code, out, _) = trace3(&["hilbert", "kernel", "--order", "8"]);
    assert_eq!(code, 0);
    assert!(out.contains("h7 = W(3,2^2)  (dim 3)"));
    assert!(out.contains("h8 = W(4,3,1) + 2W(4,2^2) + W(3^2,2)  (dim 30)"));
    let (code, _, _) = trace3(&[
        "hilbert",
        "kernel",
        "--order",
        "8",
        "--variant",
        "corrected",
    ]);
    assert_eq!(code, 0);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(trace3(&["nonsense"]).0, 2);
    assert_eq!(
        trace3(&["relations", "find", "--lambda", "4,1,1,1", "--d", "3"]).0,
        2
    );
    assert_eq!(
        trace3(&["relations", "find", "--lambda", "4,3,1", "--d", "4"]).0,
        2
    );
    assert_eq!(trace3(&["decompose", "--degree", "8", "--d", "4"]).0, 2);
    assert_eq!(trace3(&["relations", "find", "--lambda", "3,x"]).0, 2);
    assert_eq!(trace3(&["hilbert", "series", "--variant", "other"]).0, 2);
}

#[test]
fn error_report_is_written() {
    let (code, body) = json_of(
        &["relations", "find", "--lambda", "5,2", "--degree", "7"],
        "1",
    );
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&body).unwrap();
    assert!(v["error"].as_str().unwrap().contains("no catalog entries"));
}

#[test]
fn reports_are_deterministic() {
    for args in [
        &["relations", "find", "--lambda", "4,2,2", "--degree", "8"][..],
        &["catalog", "validate", "--degree", "7"][..],
        &["oracle", "--seed", "5"][..],
        &["decompose", "--degree", "8"][..],
    ] {
        let (c1, a) = json_of(args, "1");
        let (c2, b) = json_of(args, "4");
        assert_eq!(c1, 0, "{args:?}");
        assert_eq!(c1, c2);
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn other_commands() {
    let (code, out, _) = trace3(&["dims", "--d", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains(" g  48  48"));
    assert!(out.contains("r8: 30"));
    let (code, out, _) = trace3(&["dims", "--d", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("r7: formula 64, module-sum 80 (disagree)"));
    let (code, out, _) = trace3(&["decompose", "--degree", "6", "--d", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("reference table: match"));
    let (code, out, _) = trace3(&["relations", "basis", "--lambda", "3,2,2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("3 basis elements"));
    let (code, out, _) = trace3(&[
        "relations",
        "find",
        "--lambda",
        "3,3,2",
        "--mode",
        "full",
        "--timings",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("relation (6,2,-3,-3)"));
    let (code, out, _) = trace3(&["hilbert", "series", "--order", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("degree 0: 1*1"));
    let (code, _, _) = trace3(&[
        "catalog", "validate", "--lambda", "2,1,1,1", "--mode", "full",
    ]);
    assert_eq!(code, 0);
}
