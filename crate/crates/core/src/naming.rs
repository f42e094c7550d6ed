//! Identifier generation for emitted programs.

use std::collections::HashSet;

use crate::graph::{Graph, Node, NodeKind};

/// Uppercases `name` and collapses every run of non-alphanumeric characters
/// into one underscore, trimming underscores at both ends.
///
/// `"Dr. Wafik Lotfallah"` becomes `DR_WAFIK_LOTFALLAH`.
pub fn sanitize(name: &str) -> String {
    let mut out = String::with_capacity(name.len());
    let mut gap = false;
    for c in name.chars() {
        if c.is_ascii_alphanumeric() {
            if gap && !out.is_empty() {
                out.push('_');
            }
            gap = false;
            out.push(c.to_ascii_uppercase());
        } else {
            gap = true;
        }
    }
    out
}

fn kind_letter(kind: NodeKind) -> Option<char> {
    match kind {
        NodeKind::Lecture => Some('L'),
        NodeKind::Tutorial => Some('T'),
        NodeKind::Lab => Some('B'),
        _ => None,
    }
}

/// Base identifier for an event or resource node, before deduplication.
///
/// Events belonging to a course are named after the course plus a kind
/// letter (`L`, `T`, `B`) and their 1-based position among that course's
/// events of the same kind, so Math's second tutorial is `MATHT2`. Other
/// nodes use their own sanitized name.
pub fn variable_name(graph: &Graph, node: &Node) -> String {
    let base = match (kind_letter(node.kind), graph.course_of(&node.id)) {
        (Some(letter), Some(course)) => {
            let ordinal = graph
                .nodes()
                .filter(|n| n.kind == node.kind && graph.course_of(&n.id) == Some(course))
                .position(|n| n.id == node.id)
                .expect("node is its own sibling")
                + 1;
            let course_name = &graph.node(course).expect("linked course exists").name;
            format!("{}{}{}", sanitize(course_name), letter, ordinal)
        }
        _ => sanitize(&node.name),
    };
    identifier(base, node.kind.as_str())
}

fn identifier(base: String, fallback: &str) -> String {
    if base.is_empty() {
        sanitize(fallback)
    } else if base.starts_with(|c: char| c.is_ascii_digit()) {
        format!("X{base}")
    } else {
        base
    }
}

/// Hands out unique identifiers, suffixing `_2`, `_3`, ... on collision.
#[derive(Debug, Default, Clone)]
pub struct Namer {
    used: HashSet<String>,
}

impl Namer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn reserve(&mut self, name: &str) {
        self.used.insert(name.to_string());
    }

    pub fn is_used(&self, name: &str) -> bool {
        self.used.contains(name)
    }

    pub fn fresh(&mut self, base: &str) -> String {
        if self.used.insert(base.to_string()) {
            return base.to_string();
        }
        let name = (2..)
            .map(|i| format!("{base}_{i}"))
            .find(|candidate| !self.used.contains(candidate))
            .expect("unbounded suffixes");
        self.used.insert(name.clone());
        name
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NodeAttrs;

    #[test]
    fn sanitizes_display_names() {
        assert_eq!(sanitize("Dr. Wafik Lotfallah"), "DR_WAFIK_LOTFALLAH");
        assert_eq!(sanitize("  math--101 "), "MATH_101");
        assert_eq!(sanitize("Lecturer1"), "LECTURER1");
        assert_eq!(sanitize("***"), "");
    }

    #[test]
    fn event_names_follow_course_and_kind() {
        let mut g = Graph::default();
        let math = g.add_node(NodeKind::Course, "Math", NodeAttrs::default()).unwrap();
        let l1 = g.add_node(NodeKind::Lecture, "anything", NodeAttrs::default()).unwrap();
        let t1 = g.add_node(NodeKind::Tutorial, "t", NodeAttrs::default()).unwrap();
        let t2 = g.add_node(NodeKind::Tutorial, "t", NodeAttrs::default()).unwrap();
        let lab = g.add_node(NodeKind::Lab, "t", NodeAttrs::default()).unwrap();
        let loose = g.add_node(NodeKind::Lab, "Free Lab", NodeAttrs::default()).unwrap();
        for e in [&l1, &t1, &t2, &lab] {
            g.request_link(&math, e).unwrap();
        }
        let name = |id| variable_name(&g, g.node(id).unwrap());
        assert_eq!(name(&l1), "MATHL1");
        assert_eq!(name(&t1), "MATHT1");
        assert_eq!(name(&t2), "MATHT2");
        assert_eq!(name(&lab), "MATHB1");
        assert_eq!(name(&loose), "FREE_LAB");
    }

    #[test]
    fn resource_names_and_fallbacks() {
        let mut g = Graph::default();
        let dr = g.add_node(NodeKind::Lecturer, "Dr. Wafik Lotfallah", NodeAttrs::default()).unwrap();
        let odd = g.add_node(NodeKind::StudyGroup, "--", NodeAttrs::default()).unwrap();
        let num = g.add_node(NodeKind::StudyGroup, "7a", NodeAttrs::default()).unwrap();
        assert_eq!(variable_name(&g, g.node(&dr).unwrap()), "DR_WAFIK_LOTFALLAH");
        assert_eq!(variable_name(&g, g.node(&odd).unwrap()), "STUDY_GROUP");
        assert_eq!(variable_name(&g, g.node(&num).unwrap()), "X7A");
    }

    #[test]
    fn namer_suffixes_collisions() {
        let mut n = Namer::new();
        assert_eq!(n.fresh("A"), "A");
        assert_eq!(n.fresh("A"), "A_2");
        n.reserve("A_3");
        assert_eq!(n.fresh("A"), "A_4");
    }
}
