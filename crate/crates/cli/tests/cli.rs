use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_immaculate")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn char_of_one_two() {
    let out = run(&["char", "--outer", "1,2", "--kind", "rdi"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["degree"], 3);
    assert_eq!(v["terms"], serde_json::json!([{ "comp": [2, 1], "coeff": 1 }]));
}

#[test]
fn char_text_format() {
    let out = run(&["char", "--outer", "1,2", "--kind", "rdi", "--format", "text"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "F(2,1)\n");
}

#[test]
fn branching_on_two_two_passes() {
    let out = run(&["verify", "--outer", "2,2", "--suite", "branching", "--m", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);
}

#[test]
fn failed_verification_exits_one_with_report() {
    let out = run(&["verify", "--outer", "2,2", "--suite", "branching-set", "--m", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["passed"], false);
    let failures = v["checks"][0]["failures"].as_array().unwrap();
    assert!(failures.iter().any(|f| f["check"] == "dimension identity"));
}

#[test]
fn set_highlighted_poset_dot() {
    let out = run(&["poset", "--outer", "4,2,4", "--inner", "2,1,2", "--format", "dot", "--set"]);
    assert_eq!(out.status.code(), Some(0));
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("rankdir=BT"));
    let nodes = dot.lines().filter(|l| l.contains("[label=\"(")).count();
    let bold = dot.lines().filter(|l| l.contains("style=bold")).count();
    let edges = dot.lines().filter(|l| l.contains("->")).count();
    let sit = json(&run(&["enumerate", "--outer", "4,2,4", "--inner", "2,1,2"]));
    assert_eq!(nodes, sit.as_array().unwrap().len());
    assert!(bold > 0 && bold < nodes);
    assert!(edges >= nodes - 1);
}

#[test]
fn set_subposet_has_three_minima() {
    let v = json(&run(&["poset", "--outer", "4,2,4", "--inner", "2,1,2", "--set"]));
    let n = v["nodes"].as_array().unwrap().len();
    let targets: std::collections::BTreeSet<u64> =
        v["covers"].as_array().unwrap().iter().map(|c| c[1].as_u64().unwrap()).collect();
    assert_eq!(n - targets.len(), 3);
}

#[test]
fn set_subposet_json_is_smaller() {
    let full = json(&run(&["poset", "--outer", "4,2,4", "--inner", "2,1,2"]));
    let set = json(&run(&["poset", "--outer", "4,2,4", "--inner", "2,1,2", "--set"]));
    let count = |v: &Value| v["nodes"].as_array().unwrap().len();
    assert!(count(&set) < count(&full));
}

#[test]
fn enumerate_counts() {
    let v = json(&run(&["enumerate", "--outer", "2,2"]));
    assert_eq!(v.as_array().unwrap().len(), 3);
    let v = json(&run(&["enumerate", "--outer", "2,2", "--set"]));
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn straighten_round_trip_word_is_application_order() {
    let t = r#"{"outer":[2,1],"rows":[[1,3],[2]]}"#;
    let v = json(&run(&["straighten", "--tableau", t, "--direction", "bottom"]));
    let word: Vec<u64> = v["word"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    let display: Vec<String> = word.iter().rev().map(|i| format!("pi_{i}")).collect();
    let display = if display.is_empty() { "id".to_string() } else { display.join(" ") };
    assert_eq!(v["display"], display);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["char", "--outer", "1,x"][..],
        &["char", "--outer", "1,2", "--inner", "2"],
        &["char", "--outer", "1,2", "--kind", "sideways"],
        &["enumerate", "--outer", "1,2", "--format", "dot"],
        &["verify", "--suite", "nonsense"],
        &["verify", "--outer", "2,2", "--inner", "1", "--suite", "branching"],
        &["straighten", "--tableau", "{"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["poset", "--outer", "4,2,4", "--inner", "2,1,2", "--format", "dot", "--set"][..],
        &["char", "--outer", "2,1,3", "--kind", "di"],
        &["gf", "--outer", "2,2", "--inner", "1", "--set"],
        &["verify", "--suite", "relations", "--maxn", "4"],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("immaculate-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("char.json");
    let out = run(&["char", "--outer", "1,2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["degree"], 3);
    std::fs::remove_dir_all(dir).unwrap();
}
