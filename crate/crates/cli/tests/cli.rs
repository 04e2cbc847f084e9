use std::process::{Command, Output};

use serde_json::Value;

fn ywall(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ywall"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = ywall(&full);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("single JSON document")
}

fn listed(out: &Output) -> Vec<String> {
    stdout(out)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(str::to_string)
        .collect()
}

#[test]
fn enum_reduced_eight() {
    let out = ywall(&["enum", "--set", "reduced", "--n", "2", "--m", "8"]);
    assert!(out.status.success());
    assert_eq!(
        listed(&out),
        ["7,1", "6,2", "5,3", "5,2,1", "4,3,1", "3,3,2"]
    );
}

#[test]
fn enum_strict_seven_and_empty_proper() {
    let out = ywall(&["enum", "--set", "strict", "--m", "7"]);
    assert_eq!(listed(&out).len(), 5);

    let v = json(&["enum", "--set", "proper", "--n", "2", "--m", "0"]);
    assert_eq!(v["payload"]["partitions"], serde_json::json!([[]]));
    assert_eq!(v["payload"]["count"], 1);
}

#[test]
fn json_envelope_shape() {
    let v = json(&["enum", "--set", "reduced", "--n", "3", "--m", "8"]);
    let obj = v.as_object().unwrap();
    let mut keys: Vec<_> = obj.keys().cloned().collect();
    keys.sort();
    assert_eq!(keys, ["command", "params", "payload"]);
    assert_eq!(v["command"], "enum");
    assert_eq!(v["params"]["n"], 3);
    let parts = v["payload"]["partitions"].as_array().unwrap();
    assert_eq!(parts.len(), 6);
    assert!(parts
        .iter()
        .all(|p| p.as_array().unwrap().iter().all(Value::is_u64)));
}

#[test]
fn weights() {
    assert!(stdout(&ywall(&["weight", "--n", "2", "--partition", "7"])).starts_with("[3,2,2]"));
    let v = json(&["weight", "--n", "3", "--partition", "7"]);
    assert_eq!(v["payload"]["weight"], serde_json::json!([1, 2, 2, 2]));
    let v = json(&["weight", "--n", "2", "--partition", ""]);
    assert_eq!(v["payload"]["weight"], serde_json::json!([0, 0, 0]));
}

#[test]
fn bad_literal_is_usage_error() {
    let out = ywall(&["weight", "--n", "2", "--partition", "2,3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn rank_below_two_is_usage_error() {
    let out = ywall(&["enum", "--set", "reduced", "--n", "1", "--m", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ywall(&["enum", "--set", "reduced", "--m", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ywall(&["enum", "--set", "bogus", "--m", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn map_psi_and_phi() {
    let v = json(&["map", "--alg", "psi", "--n", "2", "--partition", "7"]);
    assert_eq!(v["payload"]["reduced"], serde_json::json!([1]));
    assert_eq!(v["payload"]["hat"], serde_json::json!([1]));
    assert_eq!(v["payload"]["k"], 1);

    let v = json(&["map", "--alg", "phi", "--n", "2", "--partition", "3,3,1"]);
    assert_eq!(v["payload"]["reduced"], serde_json::json!([1]));
    assert_eq!(v["payload"]["k"], 1);
}

#[test]
fn map_trace_lines() {
    let out = ywall(&[
        "map",
        "--alg",
        "psi",
        "--n",
        "2",
        "--partition",
        "14,1",
        "--trace",
    ]);
    let text = stdout(&out);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(
        lines,
        [
            "step l=0 i=2 subtract t=2",
            "reduced: 2,1",
            "hat: 2",
            "k: 2"
        ]
    );

    let v = json(&[
        "map",
        "--alg",
        "phi",
        "--n",
        "2",
        "--partition",
        "6,6,3,3",
        "--trace",
    ]);
    let trace = v["payload"]["trace"].as_array().unwrap();
    assert_eq!(trace.len(), 2);
    assert_eq!(trace[0]["kind"], "remove_pair");
    assert_eq!(trace[0]["multiple"], 1);
}

#[test]
fn map_domain_guard() {
    let out = ywall(&["map", "--alg", "psi", "--n", "2", "--partition", "5,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("already reduced"));
}

#[test]
fn map_inverses() {
    let out = ywall(&[
        "map",
        "--alg",
        "psi-inv",
        "--n",
        "2",
        "--partition",
        "2,1",
        "--hat",
        "2",
    ]);
    assert_eq!(stdout(&out), "partition: 14,1\n");
    let out = ywall(&[
        "map",
        "--alg",
        "phi-inv",
        "--n",
        "2",
        "--partition",
        "5,2",
        "--hat",
        "1",
    ]);
    assert_eq!(stdout(&out), "partition: 5,3,3,2\n");
    let out = ywall(&["map", "--alg", "phi-inv", "--n", "2", "--partition", "5,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn vch_strict_seven() {
    let v = json(&["vch", "--set", "strict", "--n", "2", "--m", "7"]);
    let mut mults: Vec<u64> = v["payload"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["multiplicity"].as_u64().unwrap())
        .collect();
    mults.sort();
    assert_eq!(mults, [1, 1, 3]);
    assert_eq!(v["payload"]["total"], 5);
}

#[test]
fn pschar_rank_four() {
    let out = ywall(&["pschar", "--n", "4", "--degree", "10"]);
    assert_eq!(stdout(&out), "1,1,1,2,2,3,4,5,6,8,10\n");
}

#[test]
fn count_reduced_matches_strict() {
    let a = json(&["count", "--set", "reduced", "--n", "3", "--max-m", "20"]);
    let b = json(&["count", "--set", "strict", "--max-m", "20"]);
    assert_eq!(a["payload"]["counts"], b["payload"]["counts"]);
}

#[test]
fn verify_default_suite_passes() {
    let out = ywall(&["verify", "--n-range", "2..4", "--max-m", "24"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() == 16);
    assert!(text.ends_with("16 checks, 0 failed\n"));
}

#[test]
fn verify_json_and_usage_errors() {
    let v = json(&[
        "verify",
        "--n-range",
        "2",
        "--max-m",
        "12",
        "--checks",
        "bijections,fock",
    ]);
    assert_eq!(v["payload"]["all_passed"], true);
    let reports = v["payload"]["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["check"], "fock");
    assert!(reports[0].get("elapsed").is_none());

    assert_eq!(
        ywall(&["verify", "--checks", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        ywall(&["verify", "--n-range", "1..3"]).status.code(),
        Some(2)
    );
}

#[test]
fn output_is_deterministic() {
    let args = [
        "verify",
        "--n-range",
        "2..3",
        "--max-m",
        "16",
        "--format",
        "json",
    ];
    let a = ywall(&args);
    let b = ywall(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn text_listing_round_trips_through_partition_flag() {
    let out = ywall(&["enum", "--set", "proper", "--n", "2", "--m", "9"]);
    for literal in listed(&out) {
        let v = json(&["weight", "--n", "2", "--partition", &literal]);
        let parts: Vec<String> = v["params"]["partition"]
            .as_array()
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(parts.join(","), literal);
        assert_eq!(v["payload"]["blocks"], 9);
    }
}
