//! End-to-end checks of the regulus binary: exit codes, report shape,
//! determinism of repeated runs.

use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn regulus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regulus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn invsgp_decide_i2_f2_not_regular_consistent() {
    let out = regulus(&[
        "invsgp", "decide", "--ring", "F2", "--input", &data("i2.json"), "--verify", "on",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["schema"], "regulus/1");
    assert_eq!(v["theorem"]["verdict"], "NotRegular");
    assert_eq!(v["oracle"]["verdict"], "NotRegular");
    assert_eq!(v["oracle"]["method"], "Exhaustive");
    assert_eq!(v["consistent"], true);
}

#[test]
fn graph_decide_loop_not_regular() {
    let out = regulus(&[
        "graph", "decide", "--ring", "Q", "--input", &data("loop.json"), "--cap", "100",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["theorem"]["verdict"], "NotRegular");
    assert_eq!(v["analysis"]["growth"], "Exceeded");
    assert_eq!(v["analysis"]["certificate_valid"], true);
}

#[test]
fn graph_graded_loop_regular() {
    let out = regulus(&[
        "graph", "graded", "--ring", "Q", "--input", &data("loop.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["theorem"]["verdict"], "Regular");
}

#[test]
fn graded_gap_decide_and_oracle() {
    let out = regulus(&[
        "graded",
        "decide",
        "--ring",
        "F2",
        "--input",
        &data("z2_groupoid.json"),
        "--cocycle",
        &data("z2_cocycle.json"),
        "--verify",
        "on",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["theorem"]["verdict"], "Regular");
    assert_eq!(v["oracle"]["verdict"], "Regular");
    assert_eq!(v["consistent"], true);

    // the same groupoid ungraded is not regular
    let out = regulus(&[
        "groupoid", "decide", "--ring", "F2", "--input", &data("z2_groupoid.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["theorem"]["verdict"], "NotRegular");
}

#[test]
fn groupoid_analyze_reports_structure() {
    let out = regulus(&["groupoid", "analyze", "--input", &data("z2_groupoid.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["analysis"]["principal"], false);
    assert_eq!(v["analysis"]["counting_identity"], true);
}

#[test]
fn malformed_json_exits_3() {
    let dir = std::env::temp_dir().join("regulus-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"broken").unwrap();
    let out = regulus(&[
        "graph", "decide", "--ring", "Q", "--input", bad.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn corrupted_action_fails_validation_with_exit_3() {
    let out = regulus(&["selfsim", "validate", "--input", &data("corrupted_action.json")]);
    assert_eq!(out.status.code(), Some(3));
    let v = stdout_json(&out);
    assert_eq!(v["analysis"]["valid"], false);
}

#[test]
fn valid_actions_pass_validation() {
    for input in ["adding_machine.json", "edge_swap.json"] {
        let out = regulus(&["selfsim", "validate", "--input", &data(input)]);
        assert_eq!(out.status.code(), Some(0), "{input}");
        let v = stdout_json(&out);
        assert_eq!(v["analysis"]["valid"], true);
    }
}

#[test]
fn selfsim_decide_exit_codes() {
    let out = regulus(&[
        "selfsim", "decide", "--ring", "F2", "--input", &data("edge_swap.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["theorem"]["verdict"], "Regular");

    let out = regulus(&[
        "selfsim",
        "decide",
        "--ring",
        "Q",
        "--input",
        &data("adding_machine.json"),
        "--budget",
        "500",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let v = stdout_json(&out);
    assert_eq!(v["theorem"]["verdict"], "Unknown");
    let reason = v["theorem"]["reason"].as_str().unwrap();
    assert!(reason.contains("level cycle lengths"), "{reason}");
}

#[test]
fn cap_exceeded_closure_reports_unknown_with_exit_2() {
    let dir = std::env::temp_dir().join("regulus-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("big.json");
    // a 5-cycle closes at order 5, past the declared cap of 3
    std::fs::write(
        &input,
        r#"{"degree": 5, "generators": [[1, 2, 3, 4, 0]], "cap": 3}"#,
    )
    .unwrap();
    let out = regulus(&[
        "invsgp", "decide", "--ring", "Q", "--input", input.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let v = stdout_json(&out);
    assert_eq!(v["theorem"]["verdict"], "Unknown");
}

#[test]
fn suite_runs_green_and_deterministically() {
    let run = || {
        regulus(&[
            "suite", "--manifest", &data("zoo_manifest.json"), "--seed", "7",
        ])
    };
    let a = run();
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stdout));
    let v = stdout_json(&a);
    assert_eq!(v["pass"], true);
    assert_eq!(v["disagreement"], false);
    let b = run();
    assert_eq!(a.stdout, b.stdout, "suite reports must be byte-identical");
}

#[test]
fn suite_flags_wrong_expectation() {
    let dir = std::env::temp_dir().join("regulus-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let manifest = dir.join("wrong.json");
    std::fs::write(
        &manifest,
        r#"{"rows": [{"name": "wrong", "kind": "graph", "ring": "Q",
            "input": {"vertices": ["v"], "edges": [{"id": "e", "src": "v", "tgt": "v"}]},
            "expect": "Regular", "cap": 50}]}"#,
    )
    .unwrap();
    let out = regulus(&["suite", "--manifest", manifest.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["pass"], false);
    assert_eq!(v["rows"][0]["pass"], false);
}

#[test]
fn empty_manifest_passes_vacuously() {
    let dir = std::env::temp_dir().join("regulus-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let manifest = dir.join("empty.json");
    std::fs::write(&manifest, r#"{"rows": []}"#).unwrap();
    let out = regulus(&["suite", "--manifest", manifest.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn algebra_oracle_from_semigroup() {
    let out = regulus(&[
        "algebra", "oracle", "--ring", "F2", "--from-semigroup", &data("z2_group.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["oracle"]["verdict"], "NotRegular");
    // the reported witness is g - 1, here over F2
    let witness = v["oracle"]["witness"].as_str().unwrap();
    assert!(witness.contains("+"), "{witness}");
}

#[test]
fn reports_are_deterministic_across_runs() {
    let run = || {
        regulus(&[
            "invsgp", "decide", "--ring", "F3", "--input", &data("b2.json"), "--seed", "42",
        ])
    };
    let (a, b) = (run(), run());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}
