use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn glw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_glw")).args(args).env_remove("GLW_SEED").output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn eval_on_m1() {
    let out = glw(&["eval", "--model", &data("m1.json"), "--formula", "<g^*>p"]);
    assert!(out.status.success());
    assert_eq!(json(&out), serde_json::json!({"sat": ["s0", "s1"]}));
    for method in ["standard", "game"] {
        let out = glw(&["eval", "--model", &data("m1.json"), "--formula", "<g^x>p", "--method", method]);
        assert_eq!(json(&out)["sat"], serde_json::json!(["s1"]));
    }
}

#[test]
fn compile_then_validate_and_check() {
    let dir = tempfile::tempdir().unwrap();
    let graph: PathBuf = dir.path().join("g.json");
    let dot = dir.path().join("g.dot");
    let out = glw(&[
        "compile", "--formula", "<(p? ; g^*)^x>e", "--out", graph.to_str().unwrap(), "--dot", dot.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let dot = std::fs::read_to_string(dot).unwrap();
    assert!(dot.starts_with("digraph G {") && dot.trim_end().ends_with('}'));
    let g = graph.to_str().unwrap();
    assert_eq!(json(&glw(&["validate", "--graph", g]))["valid"], true);
    let check = glw(&["glg-check", "--graph", g]);
    assert!(check.status.success());
    assert_eq!(json(&check)["passes"], true);
    let accept = glw(&["accept", "--graph", g, "--model", &data("m1.json")]);
    assert!(accept.status.success());
}

#[test]
fn roundtrip_final_example() {
    let out = glw(&["roundtrip", "--formula", "<(g^* n (p? ; p!))^x>e", "--states", "4", "--samples", "100"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["verdict"]["status"], "equivalent");
    let jobs = glw(&["roundtrip", "--formula", "<(g^* n (p? ; p!))^x>e", "--jobs", "2"]);
    assert_eq!(json(&jobs), json(&out));
}

#[test]
fn equiv_exit_codes() {
    let same = glw(&["equiv", "--left", "<g u h>p", "--right", "<g>p | <h>p"]);
    assert_eq!(same.status.code(), Some(0));
    let differ = glw(&["equiv", "--left", "p", "--right", "q"]);
    assert_eq!(differ.status.code(), Some(1));
    assert_eq!(json(&differ)["status"], "counterexample");
    let graph = glw(&["equiv", "--left-graph", &data("middle.json"), "--right", "<(p! ; g) u q?>e"]);
    assert_eq!(graph.status.code(), Some(0));
}

#[test]
fn extract_left_example() {
    let out = glw(&["extract", "--graph", &data("left.json")]);
    assert!(out.status.success());
    let game = String::from_utf8(out.stdout).unwrap();
    assert!(game.contains("^x") && game.contains("^*") && !game.contains('$'), "{game}");
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(glw(&["parse", "--formula", "<g>("]).status.code(), Some(2));
    assert_eq!(glw(&["eval", "--model", "/nonexistent.json", "--formula", "p"]).status.code(), Some(2));
    assert_eq!(glw(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(glw(&["parse", "--formula", "p", "--game", "g"]).status.code(), Some(2));
}

#[test]
fn parse_and_dnnf() {
    let out = glw(&["parse", "--game", "(g^* n (p? ; p!))^x"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "(g^* n p? ; p!)^x");
    let out = glw(&["dnnf", "--formula", "!<g>p"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "<g^d>!p");
}

#[test]
fn random_model_and_solve_are_seeded() {
    let a = glw(&["random-model", "--states", "3", "--seed", "5"]);
    let b = Command::new(env!("CARGO_BIN_EXE_glw")).args(["random-model", "--states", "3"]).env("GLW_SEED", "5").output().unwrap();
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, glw(&["random-model", "--states", "3"]).stdout);

    let dir = tempfile::tempdir().unwrap();
    let arena = dir.path().join("a.json");
    std::fs::write(
        &arena,
        r#"{"positions":[{"id":7,"owner":"E","priority":1,"succ":[8]},
                         {"id":8,"owner":"A","priority":2,"succ":[7,8]}]}"#,
    )
    .unwrap();
    let out = glw(&["solve", "--arena", arena.to_str().unwrap()]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["eloise"], serde_json::json!([7, 8]));
    assert_eq!(v["verified"], true);
}
