//! End-to-end tests of the binary: JSON in, JSON out, exit codes.

use std::io::Write;
use std::process::{Command, Stdio};

fn run(args: &[&str], input: &str) -> (i32, serde_json::Value) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_santalo"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    let output = child.wait_with_output().unwrap();
    let value: serde_json::Value =
        serde_json::from_slice(&output.stdout).expect("stdout is JSON");
    (output.status.code().unwrap(), value)
}

const TWO_BOXES: &str = r#"{"boxes":[
    {"min":["0","0"],"max":["1","1"]},
    {"min":["2","-3"],"max":["3","-2"]}
]}"#;

#[test]
fn transversal_feasible_pair() {
    let (code, out) = run(&["transversal"], TWO_BOXES);
    assert_eq!(code, 0);
    assert_eq!(out["schema"], "tk/1");
    assert_eq!(out["certificate"]["status"], "feasible");
    assert_eq!(out["certificate"]["sign"], serde_json::json!([1, -1]));
    assert_eq!(out["verified"], true);
}

#[test]
fn transversal_infeasible_exit_code() {
    let input = r#"{"boxes":[
        {"min":["-1/10","-1/10"],"max":["1/10","1/10"]},
        {"min":["99/10","-1/10"],"max":["101/10","1/10"]},
        {"min":["49/10","99/10"],"max":["51/10","101/10"]}
    ]}"#;
    let (code, out) = run(&["transversal"], input);
    assert_eq!(code, 1);
    assert_eq!(out["certificate"]["status"], "infeasible");
    assert_eq!(out["certificate"]["per_sign"].as_array().unwrap().len(), 2);
}

#[test]
fn invalid_input_is_exit_2_with_error_json() {
    let (code, out) = run(&["transversal"], "{\"boxes\": [{\"min\": [\"1\"]}]}");
    assert_eq!(code, 2);
    assert!(out["error"]["message"].is_string());
}

#[test]
fn convert_round_trip() {
    let input = r#"{"line":{"base":["3","4","5"],"dir":["1","2","5"]}}"#;
    let (code, out) = run(&["convert"], input);
    assert_eq!(code, 0);
    assert_eq!(out["round_trip_ok"], true);
    assert_eq!(out["cremona"]["w"][0], "10/17");
}

#[test]
fn helly_modes_report() {
    // Boxes threaded by the ascending diagonal line.
    let diagonal = r#"{"boxes":[
        {"min":["0","0"],"max":["1","1"]},
        {"min":["1","1"],"max":["2","2"]},
        {"min":["2","2"],"max":["3","3"]},
        {"min":["3","3"],"max":["4","4"]}
    ]}"#;
    for mode in ["ascending", "global"] {
        let (code, out) = run(&["helly", "--mode", mode, "--jobs", "2"], diagonal);
        assert_eq!(code, 0, "mode {mode}");
        assert_eq!(out["report"]["full_feasible"], true);
        assert_eq!(out["report"]["theorem_violation"], false);
    }
    let (code, out) = run(&["helly", "--mode", "sign", "--sign", "+-"], diagonal);
    assert_eq!(code, 0);
    assert_eq!(out["report"]["full_feasible"], false);
    assert_eq!(out["report"]["theorem_violation"], false);

    // Boxes along the anti-diagonal all meet the hyperplane x + y = 0, but
    // no ascending line threads them.
    let anti = r#"{"boxes":[
        {"min":["0","-1"],"max":["1","0"]},
        {"min":["1","-2"],"max":["2","-1"]},
        {"min":["2","-3"],"max":["3","-2"]},
        {"min":["3","-4"],"max":["4","-3"]}
    ]}"#;
    for mode in ["hyperplane", "hyperplane-global"] {
        let (code, out) = run(&["helly", "--mode", mode], anti);
        assert_eq!(code, 0, "mode {mode}");
        assert_eq!(out["report"]["full_feasible"], true);
        assert_eq!(out["report"]["theorem_violation"], false);
    }
}

#[test]
fn hull_is_deterministic_for_fixed_seed() {
    let input = r#"{"lines":[
        {"base":["0","0","0"],"dir":["1","2","3"]},
        {"base":["0","0","0"],"dir":["2","3","1"]},
        {"base":["0","0","0"],"dir":["3","1","2"]}
    ]}"#;
    let (c1, out1) = run(&["hull", "--samples", "5", "--seed", "9"], input);
    let (c2, out2) = run(&["hull", "--samples", "5", "--seed", "9"], input);
    assert_eq!(c1, 0);
    assert_eq!(c2, 0);
    assert_eq!(out1, out2);
    assert_eq!(out1["samples"].as_array().unwrap().len(), 5);
}

#[test]
fn span_and_cone() {
    let input = r#"{"lines":[
        {"base":["0","0","0"],"dir":["1","2","3"]},
        {"base":["1","0","0"],"dir":["2","3","1"]}
    ],"points":[["0","0","0"]]}"#;
    let (code, out) = run(&["span"], input);
    assert_eq!(code, 0);
    assert_eq!(out["points"][0]["on_scroll"], true);

    let input = r#"{"lines":[
        {"base":["0","0","0"],"dir":["1","2","3"]},
        {"base":["0","0","0"],"dir":["2","3","1"]}
    ],"queries":[{"base":["0","0","0"],"dir":["4/3","12/5","3/2"]}]}"#;
    let (code, out) = run(&["cone"], input);
    assert_eq!(code, 0);
    assert_eq!(
        out["cone"]["quadric"],
        serde_json::json!(["14", "-30", "3"])
    );
    assert_eq!(out["queries"][0]["on_quadric"], true);
    assert_eq!(out["queries"][0]["in_frame_hull"], true);
}

#[test]
fn star_batch() {
    let input = r#"{"flats":[
        {"base":["1","1","1"],"dir":["1","1","1"]},
        {"base":["5","5","5"],"dir":["1","0","1"]}
    ],"starboxes":[
        {"lower":["0","0","0"],"upper":["2","2","2"]}
    ]}"#;
    let (code, out) = run(&["star"], input);
    assert_eq!(code, 0);
    assert_eq!(out["results"], serde_json::json!([[true], [false]]));
}
