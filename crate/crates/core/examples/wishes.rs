//! Soft wishes drive branch-and-bound; hard wishes remove slots outright.
//!
//! cargo run --example wishes

use timetable_studio::{
    compile, decode_slot, emit, solve, Graph, NodeAttrs, NodeKind, SolverConfig, TimeGrid, Wish, WishMode,
};

fn main() {
    let mut g = Graph::new(TimeGrid::with_default_names(2, 3).unwrap());
    g.set_room_type("lecture_hall", 1, None);
    let course = g.add_node(NodeKind::Course, "Algebra", NodeAttrs::default()).unwrap();
    let lecturer = g.add_node(NodeKind::Lecturer, "Dr. Wafik Lotfallah", NodeAttrs::default()).unwrap();
    for i in 1..=3 {
        let l = g.add_node(NodeKind::Lecture, &format!("Algebra {i}"), NodeAttrs::default()).unwrap();
        g.request_link(&course, &l).unwrap();
        g.request_link(&lecturer, &l).unwrap();
    }
    // Keep the first two mornings free if possible, never teach the last slot.
    for slot in [0, 1, 3] {
        g.add_wish(Wish { resource: lecturer.clone(), slot, mode: WishMode::Soft }).unwrap();
    }
    g.add_wish(Wish { resource: lecturer.clone(), slot: 5, mode: WishMode::Hard }).unwrap();

    let model = compile(&g).unwrap();
    println!("{}\n", emit(&model).text);
    let outcome = solve(&model, &SolverConfig::default());
    for s in &outcome.solutions {
        let slots: Vec<String> = s
            .slots()
            .iter()
            .map(|&v| {
                let (day, n) = decode_slot(g.grid(), v).unwrap();
                format!("{day} {n}")
            })
            .collect();
        println!("score {}: {}", s.score, slots.join(", "));
    }
    println!("{:?}", outcome.status);
}
