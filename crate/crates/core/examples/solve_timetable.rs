//! Solves a graph file and prints the weekly grid of every resource.
//!
//! cargo run --example solve_timetable [graph.json]

use timetable_studio::{compile, grid_to_text, parse_graph, render_grids, solve, SolverConfig};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/graphs/day_off.json").to_string());
    let graph = parse_graph(&std::fs::read(&path).expect("readable graph file")).expect("valid graph");
    let model = compile(&graph).expect("graph passes the static checks");
    let outcome = solve(&model, &SolverConfig::default());
    println!("{:?}, {} nodes explored", outcome.status, outcome.stats.nodes_explored);
    let Some(best) = outcome.best() else { return };
    for grid in render_grids(&best.assignment, &graph).unwrap() {
        println!("\n{}", grid_to_text(&grid, &graph));
    }
}
