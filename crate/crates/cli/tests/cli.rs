use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tau-tilt")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn enumerate_json_has_five_complete_nodes() {
    let text = stdout(&["enumerate", "--algebra", &data("a2.alg"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 5);
    assert_eq!(v["flags"]["complete"], true);
}

#[test]
fn outputs_match_goldens() {
    let a2 = data("a2.alg");
    assert_eq!(stdout(&["enumerate", "--algebra", &a2, "--format", "json"]), golden("enumerate_a2.json"));
    assert_eq!(stdout(&["enumerate", "--algebra", &a2, "--format", "dot"]), golden("enumerate_a2.dot"));
    assert_eq!(stdout(&["enumerate", "--algebra", &a2]), golden("enumerate_a2.txt"));
    assert_eq!(stdout(&["check", "--algebra", &a2, "--module", &data("s1.mod")]), golden("check_s1.txt"));
    assert_eq!(stdout(&["oracle", "--algebra", &a2, "--format", "json"]), golden("oracle_a2.json"));
}

#[test]
fn output_is_reproducible() {
    let args = ["enumerate", "--algebra", &data("a2.alg"), "--format", "json", "--seed", "7"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn check_reports_rigidity_and_tau() {
    let text = stdout(&["check", "--algebra", &data("a2.alg"), "--module", &data("s1.mod")]);
    assert!(text.contains("tau-rigid: true"));
    assert!(text.contains("dim tau M: [0,1]"));
}

#[test]
fn oracle_agrees_with_enumeration() {
    let a2 = data("a2.alg");
    let strip = |text: String| {
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let g: Vec<_> = v["nodes"].as_array().unwrap().iter().map(|n| n["g_matrix"].clone()).collect();
        (g, v["edges"].clone())
    };
    assert_eq!(strip(stdout(&["enumerate", "--algebra", &a2, "--format", "json"])), strip(stdout(&["oracle", "--algebra", &a2, "--format", "json"])));
}

#[test]
fn mutate_reports_direction() {
    let a2 = data("a2.alg");
    let top = data("top_a2.json");
    let text = stdout(&["mutate", "--algebra", &a2, "--pair", &top, "--index", "2"]);
    assert_eq!(text, "pair: [1,1] + [1,0]\ng-matrix: [[1,0],[1,-1]]\ndirection: down\n");
    let json: serde_json::Value = serde_json::from_str(&stdout(&["mutate", "--algebra", &a2, "--pair", &top, "--index", "2", "--format", "json"])).unwrap();
    let back = stdout(&["mutate", "--algebra", &a2, "--pair", &json["pair"].to_string(), "--index", "2"]);
    assert!(back.ends_with("direction: up\n"), "{back}");
    assert!(back.contains("[[1,0],[0,1]]"));
}

#[test]
fn completions() {
    let a2 = data("a2.alg");
    let s1 = data("s1.mod");
    assert_eq!(stdout(&["bongartz", "--algebra", &a2, "--module", &s1]), "pair: [1,1] + [1,0]\ng-matrix: [[1,0],[1,-1]]\n");
    assert_eq!(stdout(&["cocompletion", "--algebra", &a2, "--module", &s1]), "pair: [1,0] + P2[1]\ng-matrix: [[1,-1],[0,-1]]\n");
    assert!(stdout(&["bongartz", "--algebra", &a2]).contains("[[1,0],[0,1]]"));
    assert!(stdout(&["cocompletion", "--algebra", &a2]).contains("[[0,-1],[-1,0]]"));
}

#[test]
fn tilting_modules_of_a2() {
    let text = stdout(&["tilting", "--algebra", &data("a2.alg")]);
    assert!(text.contains("tilting modules: 2"));
    assert_eq!(stdout(&["tilting", "--algebra", &data("a2.alg"), "--module", &data("s1.mod")]), "classical tilting: false\n");
}

#[test]
fn incomplete_enumeration_exits_zero() {
    let text = stdout(&["enumerate", "--algebra", &data("a2.alg"), "--format", "json", "--max-nodes", "2"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["flags"]["complete"], false);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["enumerate", "--algebra", "missing.alg"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--algebra", &data("a2.alg"), "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--algebra", &data("a2.alg"), "--module", &data("s1.mod"), "--format", "dot"]).status.code(), Some(2));
    let bad = run(&["mutate", "--algebra", &data("a2.alg"), "--pair", &data("top_a2.json"), "--index", "3"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("out of range"));
}
