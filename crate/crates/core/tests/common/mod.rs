#![allow(dead_code)]

use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use timetable_studio::{
    parse_graph, Graph, LinkRejection, NodeAttrs, NodeId, NodeKind, Precedence, TimeGrid, Wish, WishMode,
};

pub fn manifest_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(rel)
}

/// Loads `examples/graphs/<name>.json`.
pub fn fixture(name: &str) -> Graph {
    let path = manifest_path(&format!("examples/graphs/{name}.json"));
    let bytes = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_graph(&bytes).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn golden(name: &str) -> String {
    let path = manifest_path(&format!("tests/golden/{name}.ctr"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

const GRIDS: [(u32, u32); 7] = [(1, 4), (1, 6), (2, 3), (2, 4), (2, 5), (3, 3), (5, 2)];

/// A small random graph: at most 6 events on at most 10 slots, exercising
/// every constraint kind the compiler produces. Illegal link attempts are
/// simply dropped, as the editor would.
pub fn random_small_graph(seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (days, per_day) = *GRIDS.choose(&mut rng).unwrap();
    let mut g = Graph::new(TimeGrid::with_default_names(days, per_day).unwrap());
    let slots = g.grid().total_slots();
    for room in ["lecture_hall", "classroom", "lab"] {
        g.set_room_type(room, rng.gen_range(1..=3), None);
    }

    let courses: Vec<NodeId> = (0..rng.gen_range(0..=2))
        .map(|i| g.add_node(NodeKind::Course, &format!("C{i}"), NodeAttrs::default()).unwrap())
        .collect();
    let lecturers: Vec<NodeId> = (0..rng.gen_range(1..=2))
        .map(|i| g.add_node(NodeKind::Lecturer, &format!("Lec{i}"), NodeAttrs::default()).unwrap())
        .collect();
    let tas: Vec<NodeId> = (0..rng.gen_range(0..=2))
        .map(|i| g.add_node(NodeKind::TeachingAssistant, &format!("TA{i}"), NodeAttrs::default()).unwrap())
        .collect();
    let groups: Vec<NodeId> = (0..rng.gen_range(1..=3))
        .map(|i| g.add_node(NodeKind::StudyGroup, &format!("G{i}"), NodeAttrs::default()).unwrap())
        .collect();

    let kinds = [NodeKind::Lecture, NodeKind::Tutorial, NodeKind::Lab];
    let mut events = Vec::new();
    for i in 0..rng.gen_range(1..=6) {
        let kind = *kinds.choose(&mut rng).unwrap();
        let e = g.add_node(kind, &format!("E{i}"), NodeAttrs::default()).unwrap();
        if let Some(c) = courses.choose(&mut rng) {
            if rng.gen_bool(0.7) {
                let _ = g.request_link(c, &e);
            }
        }
        let teachers = if kind == NodeKind::Lecture { &lecturers } else { &tas };
        if let Some(t) = teachers.choose(&mut rng) {
            if rng.gen_bool(0.8) {
                let _ = g.request_link(t, &e);
            }
        }
        for group in &groups {
            if rng.gen_bool(0.5) {
                let _ = g.request_link(group, &e);
            }
        }
        events.push(e);
    }

    let resources: Vec<NodeId> = lecturers.iter().chain(&tas).chain(&groups).cloned().collect();
    for r in &resources {
        if rng.gen_bool(0.3) {
            g.require_day_off(r).unwrap();
        }
    }
    g.set_full_day_ban(rng.gen_bool(0.5));
    for _ in 0..rng.gen_range(0..=3) {
        let resource = resources.choose(&mut rng).unwrap().clone();
        let slot = rng.gen_range(0..slots);
        g.add_wish(Wish { resource, slot, mode: WishMode::Soft }).unwrap();
    }
    if rng.gen_bool(0.3) {
        let resource = resources.choose(&mut rng).unwrap().clone();
        let slot = rng.gen_range(0..slots);
        g.add_wish(Wish { resource, slot, mode: WishMode::Hard }).unwrap();
    }
    if rng.gen_bool(0.3) {
        g.block_slot(rng.gen_range(0..slots)).unwrap();
    }
    if events.len() >= 2 {
        for _ in 0..rng.gen_range(0..=2) {
            let pair: Vec<&NodeId> = events.choose_multiple(&mut rng, 2).collect();
            g.add_precedence(Precedence {
                before: pair[0].clone(),
                after: pair[1].clone(),
                strict: rng.gen_bool(0.5),
            })
            .unwrap();
        }
    }
    g
}

pub const ALL_KINDS: [NodeKind; 7] = [
    NodeKind::Lecturer,
    NodeKind::TeachingAssistant,
    NodeKind::StudyGroup,
    NodeKind::Lecture,
    NodeKind::Tutorial,
    NodeKind::Lab,
    NodeKind::Course,
];

/// Unordered kind pairs that may be linked; everything else is forbidden.
pub const ACCEPTED_PAIRS: [(NodeKind, NodeKind); 9] = [
    (NodeKind::Course, NodeKind::Lecture),
    (NodeKind::Course, NodeKind::Tutorial),
    (NodeKind::Course, NodeKind::Lab),
    (NodeKind::Lecturer, NodeKind::Lecture),
    (NodeKind::TeachingAssistant, NodeKind::Tutorial),
    (NodeKind::TeachingAssistant, NodeKind::Lab),
    (NodeKind::StudyGroup, NodeKind::Lecture),
    (NodeKind::StudyGroup, NodeKind::Tutorial),
    (NodeKind::StudyGroup, NodeKind::Lab),
];

pub fn expected_accept(a: NodeKind, b: NodeKind) -> bool {
    ACCEPTED_PAIRS.iter().any(|&(x, y)| (x, y) == (a, b) || (y, x) == (a, b))
}

/// One request on a graph built up by earlier links, with the expected answer.
pub struct CardinalityCase {
    pub name: &'static str,
    /// Event kind, then (kind, expected result) for each link made to it in order.
    pub event: NodeKind,
    pub links: &'static [(NodeKind, Result<(), LinkRejection>)],
}

pub const CARDINALITY_CASES: &[CardinalityCase] = &[
    CardinalityCase {
        name: "second lecturer on a lecture",
        event: NodeKind::Lecture,
        links: &[(NodeKind::Lecturer, Ok(())), (NodeKind::Lecturer, Err(LinkRejection::DuplicateResource))],
    },
    CardinalityCase {
        name: "second teaching assistant on a tutorial",
        event: NodeKind::Tutorial,
        links: &[
            (NodeKind::TeachingAssistant, Ok(())),
            (NodeKind::TeachingAssistant, Err(LinkRejection::DuplicateResource)),
        ],
    },
    CardinalityCase {
        name: "second course on a lecture",
        event: NodeKind::Lecture,
        links: &[(NodeKind::Course, Ok(())), (NodeKind::Course, Err(LinkRejection::DuplicateCourse))],
    },
    CardinalityCase {
        name: "second course on a lab",
        event: NodeKind::Lab,
        links: &[(NodeKind::Course, Ok(())), (NodeKind::Course, Err(LinkRejection::DuplicateCourse))],
    },
    CardinalityCase {
        name: "second group on a tutorial",
        event: NodeKind::Tutorial,
        links: &[(NodeKind::StudyGroup, Ok(())), (NodeKind::StudyGroup, Err(LinkRejection::DuplicateGroup))],
    },
    CardinalityCase {
        name: "second group on a lab",
        event: NodeKind::Lab,
        links: &[(NodeKind::StudyGroup, Ok(())), (NodeKind::StudyGroup, Err(LinkRejection::DuplicateGroup))],
    },
    CardinalityCase {
        name: "many groups on a lecture",
        event: NodeKind::Lecture,
        links: &[
            (NodeKind::StudyGroup, Ok(())),
            (NodeKind::StudyGroup, Ok(())),
            (NodeKind::StudyGroup, Ok(())),
        ],
    },
    CardinalityCase {
        name: "teacher, course and group together on a lab",
        event: NodeKind::Lab,
        links: &[
            (NodeKind::TeachingAssistant, Ok(())),
            (NodeKind::Course, Ok(())),
            (NodeKind::StudyGroup, Ok(())),
        ],
    },
];

/// Runs the 7×7 matrix and the cardinality cases; returns a description of
/// every disagreement with the expected answers.
pub fn legality_mismatches() -> Vec<String> {
    let mut out = Vec::new();
    for &a in &ALL_KINDS {
        for &b in &ALL_KINDS {
            let mut g = Graph::default();
            let x = g.add_node(a, "x", NodeAttrs::default()).unwrap();
            let y = g.add_node(b, "y", NodeAttrs::default()).unwrap();
            let expected = if expected_accept(a, b) { Ok(()) } else { Err(LinkRejection::KindForbidden) };
            let got = g.request_link(&x, &y);
            if got != expected {
                out.push(format!("{a:?}-{b:?}: expected {expected:?}, got {got:?}"));
            }
            if got.is_ok() != g.has_link(&x, &y) {
                out.push(format!("{a:?}-{b:?}: stored state disagrees with the answer"));
            }
        }
    }
    for case in CARDINALITY_CASES {
        let mut g = Graph::default();
        let event = g.add_node(case.event, "event", NodeAttrs::default()).unwrap();
        for (i, (kind, expected)) in case.links.iter().enumerate() {
            let other = g.add_node(*kind, &format!("r{i}"), NodeAttrs::default()).unwrap();
            // Alternate the argument order; legality is symmetric.
            let got = if i % 2 == 0 { g.request_link(&other, &event) } else { g.request_link(&event, &other) };
            if got != *expected {
                out.push(format!("{}: link {i} expected {expected:?}, got {got:?}", case.name));
            }
        }
    }
    let mut g = Graph::default();
    let l = g.add_node(NodeKind::Lecturer, "l", NodeAttrs::default()).unwrap();
    let e = g.add_node(NodeKind::Lecture, "e", NodeAttrs::default()).unwrap();
    let checks = [
        ("first link", g.request_link(&l, &e), Ok(())),
        ("repeated link", g.request_link(&e, &l), Err(LinkRejection::DuplicateLink)),
        ("self link", g.request_link(&e, &e), Err(LinkRejection::SelfLink)),
        ("unknown node", g.request_link(&l, &NodeId::new("nope")), Err(LinkRejection::UnknownNode)),
    ];
    for (name, got, expected) in checks {
        if got != expected {
            out.push(format!("{name}: expected {expected:?}, got {got:?}"));
        }
    }
    out
}
