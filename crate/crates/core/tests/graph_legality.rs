mod common;

use proptest::prelude::*;
use timetable_studio::{
    parse_graph, serialize_graph, Graph, GraphError, LinkRejection, NodeAttrs, NodeId, NodeKind, ParseError,
    SemanticError, TimeGrid,
};

use common::{fixture, legality_mismatches, random_small_graph, ALL_KINDS};

#[test]
fn kind_matrix_and_cardinality_follow_the_rules() {
    let mismatches = legality_mismatches();
    assert!(mismatches.is_empty(), "{mismatches:#?}");
}

#[test]
fn teaching_assistant_cannot_teach_a_lecture() {
    let mut g = Graph::default();
    let ta = g.add_node(NodeKind::TeachingAssistant, "TA", NodeAttrs::default()).unwrap();
    let l = g.add_node(NodeKind::Lecture, "L", NodeAttrs::default()).unwrap();
    assert_eq!(g.request_link(&ta, &l), Err(LinkRejection::KindForbidden));
    assert!(g.links().is_empty());
}

#[test]
fn one_teaching_assistant_may_cover_a_tutorial_and_a_lab() {
    let mut g = Graph::default();
    let ta = g.add_node(NodeKind::TeachingAssistant, "TA", NodeAttrs::default()).unwrap();
    let t = g.add_node(NodeKind::Tutorial, "T", NodeAttrs::default()).unwrap();
    let b = g.add_node(NodeKind::Lab, "B", NodeAttrs::default()).unwrap();
    assert_eq!(g.request_link(&ta, &t), Ok(()));
    assert_eq!(g.request_link(&ta, &b), Ok(()));
}

#[test]
fn events_of_follows_link_order() {
    let g = fixture("fig2");
    assert_eq!(
        g.events_of(&NodeId::new("lecturer1")).unwrap(),
        [NodeId::new("math_l1"), NodeId::new("physics_l1")]
    );
    let g = fixture("fig3");
    assert_eq!(
        g.events_of(&NodeId::new("group1")).unwrap(),
        [NodeId::new("math_l1"), NodeId::new("math_t1"), NodeId::new("math_t2")]
    );
    let mut g = Graph::default();
    let fresh = g.add_node(NodeKind::Lecturer, "New", NodeAttrs::default()).unwrap();
    assert!(g.events_of(&fresh).unwrap().is_empty());
}

#[test]
fn events_of_rejects_non_resources() {
    let g = fixture("fig2");
    assert!(matches!(g.events_of(&NodeId::new("math")), Err(GraphError::WrongClass { .. })));
    assert!(matches!(g.events_of(&NodeId::new("ghost")), Err(GraphError::UnknownNode(_))));
}

#[test]
fn illegal_link_in_a_file_is_a_semantic_error() {
    let doc = br#"{
        "nodes": [
            {"id": "lecturer1", "kind": "lecturer", "name": "L"},
            {"id": "ta1", "kind": "teaching_assistant", "name": "T"}
        ],
        "links": [["lecturer1", "ta1"]]
    }"#;
    match parse_graph(doc) {
        Err(ParseError::Semantic(SemanticError::IllegalLink { reason, .. })) => {
            assert_eq!(reason, LinkRejection::KindForbidden)
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn dangling_link_and_bad_json_are_reported() {
    let doc = br#"{"nodes": [{"id": "a", "kind": "lecturer", "name": "A"}], "links": [["a", "b"]]}"#;
    assert!(matches!(
        parse_graph(doc),
        Err(ParseError::Semantic(SemanticError::DanglingId(_)))
    ));
    match parse_graph(b"{\n  \"nodes\": [,]\n}") {
        Err(ParseError::Syntax { line, .. }) => assert_eq!(line, 2),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn empty_document_is_an_empty_default_grid_graph() {
    let g = parse_graph(br#"{"nodes": [], "links": []}"#).unwrap();
    assert_eq!(g.node_count(), 0);
    assert_eq!(g.grid(), &TimeGrid::default());
    let text = String::from_utf8(serialize_graph(&Graph::default())).unwrap();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value.as_object().unwrap().keys().collect::<Vec<_>>(), ["time_grid"]);
}

#[test]
fn one_course_serializes_to_one_node() {
    let mut g = Graph::default();
    g.add_node(NodeKind::Course, "Math", NodeAttrs::default()).unwrap();
    let value: serde_json::Value = serde_json::from_slice(&serialize_graph(&g)).unwrap();
    assert_eq!(value["nodes"].as_array().unwrap().len(), 1);
    assert!(value.get("links").is_none());
}

#[test]
fn fig3_document_counts() {
    let g = fixture("fig3");
    let value: serde_json::Value = serde_json::from_slice(&serialize_graph(&g)).unwrap();
    // 2 courses, 4 events, 1 lecturer, 2 groups; 4 course links, 2 lecturer
    // links and 4 group links.
    assert_eq!(value["nodes"].as_array().unwrap().len(), 9);
    assert_eq!(value["links"].as_array().unwrap().len(), 10);
}

/// Every stored link is legal on its own and the per-event caps hold.
fn assert_all_links_legal(g: &Graph) {
    let mut seen = std::collections::HashSet::new();
    for (a, b) in g.links() {
        assert_ne!(a, b);
        let (ka, kb) = (g.node(a).unwrap().kind, g.node(b).unwrap().kind);
        assert!(common::expected_accept(ka, kb), "{ka:?}-{kb:?} stored");
        let key = if a < b { (a, b) } else { (b, a) };
        assert!(seen.insert(key), "duplicate link {a}-{b}");
    }
    for event in g.nodes().filter(|n| n.kind.is_event()) {
        let kinds: Vec<NodeKind> = g.neighbors(&event.id).iter().map(|n| g.node(n).unwrap().kind).collect();
        let count = |f: &dyn Fn(NodeKind) -> bool| kinds.iter().filter(|k| f(**k)).count();
        assert!(count(&|k| k == NodeKind::Course) <= 1);
        assert!(count(&|k| matches!(k, NodeKind::Lecturer | NodeKind::TeachingAssistant)) <= 1);
        if event.kind != NodeKind::Lecture {
            assert!(count(&|k| k == NodeKind::StudyGroup) <= 1);
        }
    }
}

#[derive(Debug, Clone)]
enum Op {
    Add(usize),
    Link(usize, usize),
    Unlink(usize, usize),
}

fn op() -> impl Strategy<Value = Op> {
    prop_oneof![
        (0..ALL_KINDS.len()).prop_map(Op::Add),
        (0..12usize, 0..12usize).prop_map(|(a, b)| Op::Link(a, b)),
        (0..12usize, 0..12usize).prop_map(|(a, b)| Op::Unlink(a, b)),
    ]
}

proptest! {
    #[test]
    fn no_mutation_sequence_stores_an_illegal_link(ops in prop::collection::vec(op(), 1..60)) {
        let mut g = Graph::default();
        let mut ids: Vec<NodeId> = Vec::new();
        for op in ops {
            match op {
                Op::Add(k) => ids.push(g.add_node(ALL_KINDS[k], "n", NodeAttrs::default()).unwrap()),
                Op::Link(a, b) if a < ids.len() && b < ids.len() => {
                    let before = g.check_link(&ids[a], &ids[b]);
                    prop_assert_eq!(g.request_link(&ids[a], &ids[b]), before);
                }
                Op::Unlink(a, b) if a < ids.len() && b < ids.len() => {
                    g.remove_link(&ids[a], &ids[b]);
                }
                _ => {}
            }
            assert_all_links_legal(&g);
        }
        for r in g.nodes().filter(|n| n.kind.is_resource()) {
            let expected: Vec<NodeId> = g
                .links()
                .iter()
                .filter_map(|(a, b)| if *a == r.id { Some(b.clone()) } else if *b == r.id { Some(a.clone()) } else { None })
                .collect();
            prop_assert_eq!(g.events_of(&r.id).unwrap(), expected.as_slice());
        }
    }

    #[test]
    fn serialization_round_trips(seed in any::<u64>()) {
        let g = random_small_graph(seed);
        let bytes = serialize_graph(&g);
        let back = parse_graph(&bytes).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(serialize_graph(&back), bytes);
    }
}
