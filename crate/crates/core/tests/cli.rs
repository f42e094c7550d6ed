mod common;

use timetable_studio::cli::{run_cli, SolutionFile};
use timetable_studio::parse_graph;

use common::{golden, manifest_path};

fn graph(name: &str) -> String {
    manifest_path(&format!("examples/graphs/{name}.json")).display().to_string()
}

fn run(args: &[&str]) -> i32 {
    run_cli(std::iter::once("ttstudio").chain(args.iter().copied()))
}

#[test]
fn check_passes_on_fig3() {
    assert_eq!(run(&["check", &graph("fig3")]), 0);
}

#[test]
fn compile_writes_the_golden() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.ctr");
    assert_eq!(run(&["compile", &graph("fig2"), "-o", out.to_str().unwrap()]), 0);
    assert_eq!(std::fs::read_to_string(out).unwrap(), golden("fig2"));
}

#[test]
fn solve_then_render() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("solution.json");
    assert_eq!(run(&["solve", &graph("wish"), "--out", out.to_str().unwrap()]), 0);
    let file: SolutionFile = serde_json::from_slice(&std::fs::read(&out).unwrap()).unwrap();
    assert_eq!(file.score, 1);
    assert_eq!(file.assignments.len(), 1);
    assert_eq!(run(&["render", &graph("wish"), out.to_str().unwrap()]), 0);
}

#[test]
fn gen_writes_a_parseable_graph() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.json");
    let path = out.to_str().unwrap();
    assert_eq!(run(&["gen", "--seed", "7", "--courses", "3", "--wishes", "4", "-o", path]), 0);
    let g = parse_graph(&std::fs::read(&out).unwrap()).unwrap();
    assert_eq!(g.nodes().filter(|n| n.kind.is_event()).count(), 9);
    assert_eq!(run(&["gen", "--tas", "0", "-o", path]), 1);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["solve", "missing.json"]), 2);
    assert_eq!(run(&["frobnicate"]), 2);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"nodes":[{"id":"a","kind":"lecturer","name":"A"},{"id":"b","kind":"course","name":"B"}],"links":[["a","b"]]}"#,
    )
    .unwrap();
    assert_eq!(run(&["check", bad.to_str().unwrap()]), 1);
    std::fs::write(&bad, "{").unwrap();
    assert_eq!(run(&["check", bad.to_str().unwrap()]), 2);
}
