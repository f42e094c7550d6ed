//! Generates a department-sized instance, compiles it and asks for the first
//! five improving timetables.
//!
//! cargo run --release --example scale [seed]

use std::time::{Duration, Instant};

use timetable_studio::solver::check_assignment;
use timetable_studio::{compile, gen_instance, solve, GeneratorSpec, SolverConfig};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let spec = GeneratorSpec {
        seed,
        courses: 60,
        groups: 20,
        lecturers: 20,
        tas: 25,
        tutorials_per_course: 3,
        wishes: 120,
        ..GeneratorSpec::default()
    };
    let graph = gen_instance(&spec).expect("spec is feasible");
    let events = graph.nodes().filter(|n| n.kind.is_event()).count();
    let resources = graph.nodes().filter(|n| n.kind.is_resource()).count();

    let t = Instant::now();
    let model = compile(&graph).expect("generated graphs compile");
    println!(
        "{events} events, {resources} resources, {} constraints, compiled in {:?}",
        model.constraints.len(),
        t.elapsed()
    );

    let config = SolverConfig {
        max_solutions: Some(5),
        time_limit: Some(Duration::from_secs(60)),
        ..SolverConfig::default()
    };
    let outcome = solve(&model, &config);
    for s in &outcome.solutions {
        let checked = check_assignment(&model, &s.slots()).is_ok();
        println!(
            "score {:3} after {:>8.1?} ({} nodes, checker {})",
            s.score,
            s.stats.elapsed,
            s.stats.nodes_explored,
            if checked { "ok" } else { "FAILED" }
        );
    }
    println!("{:?} after {:?}", outcome.status, outcome.stats.elapsed);
}
