// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::io::Write;
use std::process::{Command, Output, Stdio};

const HEX_CHORD: &str = "6 7\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n0 3\n";

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ivcolor"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    // Commands that do not read stdin may exit before the write lands.
    let _ = pipe.write_all(stdin.as_bytes());
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn gen_fan_edge_list() {
    let o = run(&["gen", "--family", "tf", "--n", "7"], "");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("12 21\n"));
    assert_eq!(text.lines().count(), 22);
}

#[test]
fn gen_color_verify_pipeline() {
    for family in [
        vec!["--family", "random", "--n", "11", "--seed", "4"],
        vec!["--family", "random", "--n", "16", "--seed", "9"],
        vec!["--family", "cycle", "--n", "8"],
    ] {
        let mut args = vec!["gen"];
        args.extend(&family);
        let graph = stdout(&run(&args, ""));
        for method in ["construct", "exact"] {
            let colored = run(&["color", "--method", method], &graph);
            assert_eq!(colored.status.code(), Some(0), "{family:?} {method}");
            let checked = run(&["verify"], &stdout(&colored));
            assert_eq!(checked.status.code(), Some(0));
            assert_eq!(json(&checked)["valid"], true);
        }
    }
}

#[test]
fn triangle_graph_width_is_negative() {
    let graph = stdout(&run(
        &[
            "gen", "--family", "tklm", "--k", "1", "--l", "1", "--m", "1",
        ],
        "",
    ));
    let o = run(&["width"], &graph);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["verdict"], "not_colorable");
    assert_eq!(v["certificate"]["kind"], "exhausted_all_t");
}

#[test]
fn hexagon_with_chord_gets_three_colors() {
    let o = run(&["color", "--method", "construct"], HEX_CHORD);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["t"], 3);
    assert_eq!(v["edges"].as_array().unwrap().len(), 7);
    let w = run(&["width"], HEX_CHORD);
    assert_eq!(json(&w)["t"], 3);
}

#[test]
fn trace_file_lists_reductions() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("trace.json");
    let o = run(&["color", "--trace", trace.to_str().unwrap()], HEX_CHORD);
    assert_eq!(o.status.code(), Some(0));
    let steps: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(trace).unwrap()).unwrap();
    let steps = steps.as_array().unwrap();
    assert!(!steps.is_empty());
    assert!(steps.iter().all(|s| s["case"].is_string()));
}

#[test]
fn files_instead_of_pipes() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.edges");
    let c = dir.path().join("c.json");
    let gs = g.to_str().unwrap();
    let cs = c.to_str().unwrap();
    assert_eq!(
        run(&["gen", "--family", "tf", "--n", "6", "--out", gs], "")
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        run(&["color", "--method", "exact", "--in", gs, "--out", cs], "")
            .status
            .code(),
        Some(0)
    );
    let o = run(&["verify", "--in", cs, "--graph", gs], "");
    assert_eq!(o.status.code(), Some(0));
    let dot = run(&["export-dot", "--in", gs, "--coloring", cs], "");
    assert_eq!(dot.status.code(), Some(0));
    assert!(stdout(&dot).contains("0 -- 1 [label="));
}

#[test]
fn verify_reports_violations() {
    let bad = "{\"t\": 2, \"edges\": [[0, 1, 1], [1, 2, 1]]}";
    let o = run(&["verify"], bad);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["valid"], false);
    assert_eq!(v["violation"]["kind"], "not_proper");
}

#[test]
fn recognize_accepts_and_rejects() {
    let o = run(&["recognize"], HEX_CHORD);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["order"], serde_json::json!([0, 1, 2, 3, 4, 5]));
    let k4 = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
    let o = run(&["recognize"], k4);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["verdict"], "reject");
}

#[test]
fn odd_cycle_construction_is_negative() {
    let c5 = stdout(&run(&["gen", "--family", "cycle", "--n", "5"], ""));
    let o = run(&["color"], &c5);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["certificate"]["kind"], "odd_cycle");
}

#[test]
fn budget_exhaustion_is_inconclusive() {
    let g = stdout(&run(
        &[
            "gen", "--family", "tklm", "--k", "3", "--l", "3", "--m", "3",
        ],
        "",
    ));
    let o = run(&["width", "--budget-ms", "0"], &g);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["verdict"], "inconclusive");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["frobnicate"],
        vec!["gen", "--family", "tf"],
        vec!["gen", "--family", "nope", "--n", "4"],
        vec!["fan", "--n", "2"],
        vec!["color", "--t", "3"],
    ] {
        let o = run(&args, HEX_CHORD);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    let o = run(&["width"], "3 5\n0 1\n");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn fan_and_demo() {
    let o = run(&["fan", "--n", "9"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["t"], 8);
    let o = run(&["demo-axenovich", "--n", "9"], "");
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["separating_triangle_count"], 5);
    assert_eq!(v["coloring_valid"], true);
}

#[test]
fn outputs_are_byte_stable() {
    let cases: [&[&str]; 5] = [
        &["gen", "--family", "random", "--n", "20", "--seed", "7"],
        &["fan", "--n", "12"],
        &["fan", "--n", "6", "--format", "dot"],
        &["demo-axenovich", "--n", "7"],
        &["color", "--method", "exact"],
    ];
    for args in cases {
        let input = if args[0] == "color" { HEX_CHORD } else { "" };
        let a = run(args, input);
        let b = run(args, input);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
