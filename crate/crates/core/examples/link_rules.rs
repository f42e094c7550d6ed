//! Draws a small course graph one link at a time and shows which requests
//! the editor accepts.
//!
//! cargo run --example link_rules

use timetable_studio::{Graph, NodeAttrs, NodeKind};

fn main() {
    let mut g = Graph::default();
    g.set_room_type("lecture_hall", 2, None);
    g.set_room_type("classroom", 2, None);
    let mut add = |kind, name: &str| g.add_node(kind, name, NodeAttrs::default()).unwrap();
    let math = add(NodeKind::Course, "Math");
    let lecture = add(NodeKind::Lecture, "Math Lecture 1");
    let tutorial = add(NodeKind::Tutorial, "Math Tutorial 1");
    let lecturer = add(NodeKind::Lecturer, "Lecturer1");
    let other = add(NodeKind::Lecturer, "Lecturer2");
    let ta = add(NodeKind::TeachingAssistant, "TA1");
    let group1 = add(NodeKind::StudyGroup, "Group1");
    let group2 = add(NodeKind::StudyGroup, "Group2");

    let requests = [
        (&math, &lecture),
        (&math, &tutorial),
        (&lecturer, &lecture),
        (&other, &lecture),
        (&ta, &lecture),
        (&ta, &tutorial),
        (&group1, &lecture),
        (&group2, &lecture),
        (&group1, &tutorial),
        (&group2, &tutorial),
        (&lecturer, &other),
        (&lecture, &lecture),
        (&math, &lecture),
    ];
    for (a, b) in requests {
        let names = (g.node(a).unwrap().name.clone(), g.node(b).unwrap().name.clone());
        match g.request_link(a, b) {
            Ok(()) => println!("{:>16} - {:<16} linked", names.0, names.1),
            Err(reason) => println!("{:>16} - {:<16} rejected: {} ({reason})", names.0, names.1, reason.code()),
        }
    }
    println!("\nGroup1 attends {:?}", g.events_of(&group1).unwrap());
}
