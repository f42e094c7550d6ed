//! Calls the HTTP handlers in-process with JSON bodies, as the web editor
//! would. `ttstudio serve` exposes the same handlers on a socket.
//!
//! cargo run --example http_api

use serde_json::json;
use timetable_studio::service::{compile_graph, solve_graph, validate_link, ServiceConfig};

fn main() {
    let graph: serde_json::Value = serde_json::from_str(include_str!("graphs/fig3.json")).unwrap();
    let show = |route: &str, r: timetable_studio::service::ApiResponse| {
        println!("{route} -> {}\n{}\n", r.status, serde_json::to_string_pretty(&r.body).unwrap());
    };
    let body = |v: serde_json::Value| serde_json::to_vec(&v).unwrap();

    show(
        "POST /api/validate-link",
        validate_link(&body(json!({"graph": graph, "a": "lecturer1", "b": "math_t1"}))),
    );
    show("POST /api/compile", compile_graph(&body(json!({"graph": graph}))));
    show(
        "POST /api/solve",
        solve_graph(
            &body(json!({"graph": graph, "max_solutions": 1, "time_limit_ms": 1000})),
            &ServiceConfig::default(),
        ),
    );
}
