//! Prints the constraint program for a graph file, with the static checks.
//!
//! cargo run --example compile_program [graph.json]

use timetable_studio::{compile, emit, parse_graph, static_checks};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/graphs/fig3.json").to_string());
    let graph = parse_graph(&std::fs::read(&path).expect("readable graph file")).expect("valid graph");
    for finding in static_checks(&graph) {
        eprintln!("{:?} {}: {}", finding.severity, finding.code, finding.message);
    }
    match compile(&graph) {
        Ok(model) => println!("{}", emit(&model).text),
        Err(e) => eprintln!("{e}"),
    }
}
