//! The typed entity-relationship graph the user draws.
//!
//! Resources (lecturers, teaching assistants, study groups) and events
//! (lectures, tutorials, labs) are nodes; a Course node ties the events of
//! one course together. Every link is checked against the legality rules when
//! it is requested, so a stored [`Graph`] never holds an illegal link.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use indexmap::{IndexMap, IndexSet};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grid::{GridError, Slot, TimeGrid};

/// Opaque node identifier. Fresh ids are generated as `n1`, `n2`, ...
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeId(String);

impl NodeId {
    pub fn new(id: impl Into<String>) -> Self {
        Self(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for NodeId {
    fn from(s: &str) -> Self {
        Self(s.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeClass {
    Resource,
    Event,
    /// Courses group events but never become solver variables.
    Meta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeKind {
    Lecturer,
    TeachingAssistant,
    StudyGroup,
    Lecture,
    Tutorial,
    Lab,
    Course,
}

impl NodeKind {
    pub const ALL: [NodeKind; 7] = [
        NodeKind::Lecturer,
        NodeKind::TeachingAssistant,
        NodeKind::StudyGroup,
        NodeKind::Lecture,
        NodeKind::Tutorial,
        NodeKind::Lab,
        NodeKind::Course,
    ];

    pub fn class(self) -> NodeClass {
        match self {
            NodeKind::Lecturer | NodeKind::TeachingAssistant | NodeKind::StudyGroup => NodeClass::Resource,
            NodeKind::Lecture | NodeKind::Tutorial | NodeKind::Lab => NodeClass::Event,
            NodeKind::Course => NodeClass::Meta,
        }
    }

    pub fn is_resource(self) -> bool {
        self.class() == NodeClass::Resource
    }

    pub fn is_event(self) -> bool {
        self.class() == NodeClass::Event
    }

    /// Room type an event of this kind needs unless told otherwise.
    pub fn default_room_type(self) -> Option<&'static str> {
        match self {
            NodeKind::Lecture => Some("lecture_hall"),
            NodeKind::Tutorial => Some("classroom"),
            NodeKind::Lab => Some("lab"),
            _ => None,
        }
    }

    /// The staff kind that teaches events of this kind.
    pub fn teacher_kind(self) -> Option<NodeKind> {
        match self {
            NodeKind::Lecture => Some(NodeKind::Lecturer),
            NodeKind::Tutorial | NodeKind::Lab => Some(NodeKind::TeachingAssistant),
            _ => None,
        }
    }

    /// Whether a link between the two kinds is ever legal, ignoring
    /// cardinality. Symmetric.
    pub fn may_link(self, other: NodeKind) -> bool {
        use NodeKind::*;
        let allowed = |a: NodeKind, b: NodeKind| {
            matches!(
                (a, b),
                (Course, Lecture | Tutorial | Lab)
                    | (Lecturer, Lecture)
                    | (TeachingAssistant, Tutorial | Lab)
                    | (StudyGroup, Lecture | Tutorial | Lab)
            )
        };
        allowed(self, other) || allowed(other, self)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            NodeKind::Lecturer => "lecturer",
            NodeKind::TeachingAssistant => "teaching_assistant",
            NodeKind::StudyGroup => "study_group",
            NodeKind::Lecture => "lecture",
            NodeKind::Tutorial => "tutorial",
            NodeKind::Lab => "lab",
            NodeKind::Course => "course",
        }
    }
}

impl fmt::Display for NodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub id: NodeId,
    pub kind: NodeKind,
    pub name: String,
    /// Set on event nodes only.
    pub room_type: Option<String>,
    /// Maximum sessions per week, resource nodes only. `None` is unlimited.
    pub teaching_load: Option<u32>,
}

/// Optional attributes for [`Graph::add_node`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NodeAttrs {
    pub room_type: Option<String>,
    pub teaching_load: Option<u32>,
}

impl NodeAttrs {
    pub fn room_type(name: impl Into<String>) -> Self {
        Self {
            room_type: Some(name.into()),
            ..Self::default()
        }
    }

    pub fn teaching_load(load: u32) -> Self {
        Self {
            teaching_load: Some(load),
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoomType {
    pub count: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub capacity: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WishMode {
    /// Scored preference: the slot should stay free.
    Soft,
    /// The slot is removed from every linked event's domain.
    Hard,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Wish {
    pub resource: NodeId,
    pub slot: Slot,
    pub mode: WishMode,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Precedence {
    pub before: NodeId,
    pub after: NodeId,
    pub strict: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Policies {
    pub global_blocked_slots: BTreeSet<Slot>,
    /// Resources that must keep at least one day free of events.
    pub extra_day_off: IndexSet<NodeId>,
    /// Forbid any study group from using both the first and last slot of a day.
    pub full_day_ban: bool,
}

impl Policies {
    pub fn is_default(&self) -> bool {
        self == &Policies::default()
    }
}

/// Why a link request was refused.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Error)]
pub enum LinkRejection {
    #[error("these node kinds can never be linked")]
    KindForbidden,
    #[error("the event is already taught by a lecturer or teaching assistant")]
    DuplicateResource,
    #[error("the event already belongs to a course")]
    DuplicateCourse,
    #[error("the tutorial or lab already has its study group")]
    DuplicateGroup,
    #[error("the nodes are already linked")]
    DuplicateLink,
    #[error("a node cannot be linked to itself")]
    SelfLink,
    #[error("unknown node")]
    UnknownNode,
}

impl LinkRejection {
    pub fn code(self) -> &'static str {
        match self {
            LinkRejection::KindForbidden => "KindForbidden",
            LinkRejection::DuplicateResource => "DuplicateResource",
            LinkRejection::DuplicateCourse => "DuplicateCourse",
            LinkRejection::DuplicateGroup => "DuplicateGroup",
            LinkRejection::DuplicateLink => "DuplicateLink",
            LinkRejection::SelfLink => "SelfLink",
            LinkRejection::UnknownNode => "UnknownNode",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown node {0}")]
    UnknownNode(NodeId),
    #[error("node {id} is a {kind}, expected a {expected:?} node")]
    WrongClass {
        id: NodeId,
        kind: NodeKind,
        expected: NodeClass,
    },
    #[error("node names must be nonempty")]
    EmptyName,
    #[error("{kind} nodes cannot carry a {attribute}")]
    IllegalAttribute { kind: NodeKind, attribute: &'static str },
    #[error("duplicate node id {0}")]
    DuplicateId(NodeId),
    #[error("precedence must relate two distinct events")]
    SelfPrecedence,
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error("link {a}-{b} rejected: {reason}")]
    Link {
        a: NodeId,
        b: NodeId,
        reason: LinkRejection,
    },
}

/// The user's complete problem statement.
#[derive(Debug, Clone, Default)]
pub struct Graph {
    grid: TimeGrid,
    nodes: IndexMap<NodeId, Node>,
    links: Vec<(NodeId, NodeId)>,
    // Neighbours per node in link-creation order.
    adjacency: HashMap<NodeId, Vec<NodeId>>,
    link_set: HashSet<(NodeId, NodeId)>,
    rooms: IndexMap<String, RoomType>,
    policies: Policies,
    wishes: Vec<Wish>,
    precedences: Vec<Precedence>,
    next_id: u64,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.grid == other.grid
            && self.nodes == other.nodes
            && self.links == other.links
            && self.rooms == other.rooms
            && self.policies == other.policies
            && self.wishes == other.wishes
            && self.precedences == other.precedences
    }
}

impl Eq for Graph {}

fn link_key(a: &NodeId, b: &NodeId) -> (NodeId, NodeId) {
    if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

impl Graph {
    pub fn new(grid: TimeGrid) -> Self {
        Self {
            grid,
            ..Self::default()
        }
    }

    pub fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    /// Adds a node and returns its fresh id.
    ///
    /// Event nodes get their kind's default room type when none is given; a
    /// room type missing from the inventory is registered with zero rooms.
    pub fn add_node(&mut self, kind: NodeKind, name: &str, attrs: NodeAttrs) -> Result<NodeId, GraphError> {
        let id = self.fresh_id();
        self.insert_node(id.clone(), kind, name, attrs)?;
        Ok(id)
    }

    /// Adds a node under a caller-chosen id (used when loading documents).
    pub fn insert_node(&mut self, id: NodeId, kind: NodeKind, name: &str, attrs: NodeAttrs) -> Result<(), GraphError> {
        if self.nodes.contains_key(&id) {
            return Err(GraphError::DuplicateId(id));
        }
        let node = self.build_node(id.clone(), kind, name, attrs)?;
        if let Some(room) = &node.room_type {
            self.rooms
                .entry(room.clone())
                .or_insert(RoomType { count: 0, capacity: None });
        }
        self.adjacency.insert(id.clone(), Vec::new());
        self.nodes.insert(id, node);
        Ok(())
    }

    fn build_node(&self, id: NodeId, kind: NodeKind, name: &str, attrs: NodeAttrs) -> Result<Node, GraphError> {
        if name.trim().is_empty() {
            return Err(GraphError::EmptyName);
        }
        if attrs.room_type.is_some() && !kind.is_event() {
            return Err(GraphError::IllegalAttribute {
                kind,
                attribute: "room_type",
            });
        }
        if attrs.teaching_load.is_some() && !kind.is_resource() {
            return Err(GraphError::IllegalAttribute {
                kind,
                attribute: "teaching_load",
            });
        }
        let room_type = attrs
            .room_type
            .or_else(|| kind.default_room_type().map(str::to_string));
        Ok(Node {
            id,
            kind,
            name: name.to_string(),
            room_type,
            teaching_load: attrs.teaching_load,
        })
    }

    fn fresh_id(&mut self) -> NodeId {
        loop {
            self.next_id += 1;
            let id = NodeId(format!("n{}", self.next_id));
            if !self.nodes.contains_key(&id) {
                return id;
            }
        }
    }

    pub fn rename_node(&mut self, id: &NodeId, name: &str) -> Result<(), GraphError> {
        if name.trim().is_empty() {
            return Err(GraphError::EmptyName);
        }
        let node = self
            .nodes
            .get_mut(id)
            .ok_or_else(|| GraphError::UnknownNode(id.clone()))?;
        node.name = name.to_string();
        Ok(())
    }

    /// Checks a link request without storing it.
    pub fn check_link(&self, a: &NodeId, b: &NodeId) -> Result<(), LinkRejection> {
        let (Some(na), Some(nb)) = (self.nodes.get(a), self.nodes.get(b)) else {
            return Err(LinkRejection::UnknownNode);
        };
        if a == b {
            return Err(LinkRejection::SelfLink);
        }
        if !na.kind.may_link(nb.kind) {
            return Err(LinkRejection::KindForbidden);
        }
        if self.link_set.contains(&link_key(a, b)) {
            return Err(LinkRejection::DuplicateLink);
        }
        // Every legal pair has exactly one event endpoint.
        let (event, other) = if na.kind.is_event() { (na, nb) } else { (nb, na) };
        let has_neighbour = |pred: &dyn Fn(NodeKind) -> bool| {
            self.adjacency[&event.id]
                .iter()
                .any(|n| pred(self.nodes[n].kind))
        };
        match other.kind {
            NodeKind::Course if has_neighbour(&|k| k == NodeKind::Course) => Err(LinkRejection::DuplicateCourse),
            NodeKind::Lecturer | NodeKind::TeachingAssistant
                if has_neighbour(&|k| matches!(k, NodeKind::Lecturer | NodeKind::TeachingAssistant)) =>
            {
                Err(LinkRejection::DuplicateResource)
            }
            NodeKind::StudyGroup
                if event.kind != NodeKind::Lecture && has_neighbour(&|k| k == NodeKind::StudyGroup) =>
            {
                Err(LinkRejection::DuplicateGroup)
            }
            _ => Ok(()),
        }
    }

    /// Stores the link if it passes every legality rule.
    pub fn request_link(&mut self, a: &NodeId, b: &NodeId) -> Result<(), LinkRejection> {
        self.check_link(a, b)?;
        self.link_set.insert(link_key(a, b));
        self.links.push((a.clone(), b.clone()));
        self.adjacency.get_mut(a).expect("checked").push(b.clone());
        self.adjacency.get_mut(b).expect("checked").push(a.clone());
        Ok(())
    }

    /// Removes a link; returns whether it existed.
    pub fn remove_link(&mut self, a: &NodeId, b: &NodeId) -> bool {
        if !self.link_set.remove(&link_key(a, b)) {
            return false;
        }
        self.links
            .retain(|(x, y)| !((x == a && y == b) || (x == b && y == a)));
        if let Some(list) = self.adjacency.get_mut(a) {
            list.retain(|n| n != b);
        }
        if let Some(list) = self.adjacency.get_mut(b) {
            list.retain(|n| n != a);
        }
        true
    }

    pub fn node(&self, id: &NodeId) -> Option<&Node> {
        self.nodes.get(id)
    }

    pub fn require(&self, id: &NodeId) -> Result<&Node, GraphError> {
        self.nodes
            .get(id)
            .ok_or_else(|| GraphError::UnknownNode(id.clone()))
    }

    fn require_class(&self, id: &NodeId, class: NodeClass) -> Result<&Node, GraphError> {
        let node = self.require(id)?;
        if node.kind.class() != class {
            return Err(GraphError::WrongClass {
                id: id.clone(),
                kind: node.kind,
                expected: class,
            });
        }
        Ok(node)
    }

    /// Nodes in creation order.
    pub fn nodes(&self) -> impl Iterator<Item = &Node> {
        self.nodes.values()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Creation index of a node, used for deterministic ordering.
    pub fn position(&self, id: &NodeId) -> Option<usize> {
        self.nodes.get_index_of(id)
    }

    /// Links in creation order, as requested.
    pub fn links(&self) -> &[(NodeId, NodeId)] {
        &self.links
    }

    pub fn has_link(&self, a: &NodeId, b: &NodeId) -> bool {
        self.link_set.contains(&link_key(a, b))
    }

    /// Neighbours in link-creation order.
    pub fn neighbors(&self, id: &NodeId) -> &[NodeId] {
        self.adjacency.get(id).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Events linked to a resource, in link-creation order.
    pub fn events_of(&self, resource: &NodeId) -> Result<&[NodeId], GraphError> {
        self.require_class(resource, NodeClass::Resource)?;
        Ok(self.neighbors(resource))
    }

    /// The course an event belongs to, if linked.
    pub fn course_of(&self, event: &NodeId) -> Option<&NodeId> {
        self.neighbors(event)
            .iter()
            .find(|n| self.nodes[*n].kind == NodeKind::Course)
    }

    /// Resource nodes linked to an event, in link-creation order.
    pub fn resources_of(&self, event: &NodeId) -> impl Iterator<Item = &Node> {
        self.neighbors(event)
            .iter()
            .map(|n| &self.nodes[n])
            .filter(|n| n.kind.is_resource())
    }

    pub fn rooms(&self) -> &IndexMap<String, RoomType> {
        &self.rooms
    }

    pub fn set_room_type(&mut self, name: impl Into<String>, count: u32, capacity: Option<u32>) {
        self.rooms.insert(name.into(), RoomType { count, capacity });
    }

    pub fn policies(&self) -> &Policies {
        &self.policies
    }

    pub fn block_slot(&mut self, slot: Slot) -> Result<(), GraphError> {
        self.grid.check_slot(slot)?;
        self.policies.global_blocked_slots.insert(slot);
        Ok(())
    }

    pub fn require_day_off(&mut self, resource: &NodeId) -> Result<(), GraphError> {
        self.require_class(resource, NodeClass::Resource)?;
        self.policies.extra_day_off.insert(resource.clone());
        Ok(())
    }

    pub fn set_full_day_ban(&mut self, on: bool) {
        self.policies.full_day_ban = on;
    }

    pub fn wishes(&self) -> &[Wish] {
        &self.wishes
    }

    pub fn add_wish(&mut self, wish: Wish) -> Result<(), GraphError> {
        self.require_class(&wish.resource, NodeClass::Resource)?;
        self.grid.check_slot(wish.slot)?;
        self.wishes.push(wish);
        Ok(())
    }

    /// Adds the wish, or removes it when the same resource/slot/mode is
    /// already present. Returns whether a wish is present afterwards.
    pub fn toggle_wish(&mut self, wish: Wish) -> Result<bool, GraphError> {
        if let Some(pos) = self.wishes.iter().position(|w| w == &wish) {
            self.wishes.remove(pos);
            return Ok(false);
        }
        self.add_wish(wish)?;
        Ok(true)
    }

    pub fn precedences(&self) -> &[Precedence] {
        &self.precedences
    }

    pub fn add_precedence(&mut self, precedence: Precedence) -> Result<(), GraphError> {
        self.require_class(&precedence.before, NodeClass::Event)?;
        self.require_class(&precedence.after, NodeClass::Event)?;
        if precedence.before == precedence.after {
            return Err(GraphError::SelfPrecedence);
        }
        self.precedences.push(precedence);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph_with(kinds: &[NodeKind]) -> (Graph, Vec<NodeId>) {
        let mut g = Graph::default();
        let ids = kinds
            .iter()
            .enumerate()
            .map(|(i, k)| g.add_node(*k, &format!("node {i}"), NodeAttrs::default()).unwrap())
            .collect();
        (g, ids)
    }

    #[test]
    fn add_node_assigns_fresh_ids_and_defaults() {
        let mut g = Graph::default();
        let course = g.add_node(NodeKind::Course, "Math", NodeAttrs::default()).unwrap();
        assert_eq!(course.as_str(), "n1");
        assert_eq!(g.node_count(), 1);
        let lec = g.add_node(NodeKind::Lecture, "Math L1", NodeAttrs::default()).unwrap();
        assert_eq!(g.node(&lec).unwrap().room_type.as_deref(), Some("lecture_hall"));
        assert_eq!(g.rooms()["lecture_hall"].count, 0);
    }

    #[test]
    fn add_node_rejects_illegal_attributes() {
        let mut g = Graph::default();
        assert_eq!(
            g.add_node(NodeKind::Lecturer, "X", NodeAttrs::room_type("lab")),
            Err(GraphError::IllegalAttribute {
                kind: NodeKind::Lecturer,
                attribute: "room_type"
            })
        );
        assert!(matches!(
            g.add_node(NodeKind::Lecture, "L", NodeAttrs::teaching_load(3)),
            Err(GraphError::IllegalAttribute { .. })
        ));
        assert_eq!(g.add_node(NodeKind::Course, "  ", NodeAttrs::default()), Err(GraphError::EmptyName));
        assert_eq!(g.node_count(), 0);
    }

    #[test]
    fn lecturer_links_to_lecture_once() {
        let (mut g, ids) = graph_with(&[NodeKind::Lecturer, NodeKind::Lecturer, NodeKind::Lecture]);
        assert_eq!(g.request_link(&ids[0], &ids[2]), Ok(()));
        assert_eq!(g.request_link(&ids[1], &ids[2]), Err(LinkRejection::DuplicateResource));
        assert_eq!(g.request_link(&ids[2], &ids[0]), Err(LinkRejection::DuplicateLink));
    }

    #[test]
    fn teaching_assistant_cannot_teach_lectures() {
        let (mut g, ids) = graph_with(&[NodeKind::TeachingAssistant, NodeKind::Lecture]);
        assert_eq!(g.request_link(&ids[0], &ids[1]), Err(LinkRejection::KindForbidden));
        assert!(g.links().is_empty());
    }

    #[test]
    fn groups_per_event_kind() {
        let (mut g, ids) = graph_with(&[
            NodeKind::StudyGroup,
            NodeKind::StudyGroup,
            NodeKind::Lecture,
            NodeKind::Tutorial,
        ]);
        g.request_link(&ids[0], &ids[2]).unwrap();
        g.request_link(&ids[1], &ids[2]).unwrap();
        g.request_link(&ids[0], &ids[3]).unwrap();
        assert_eq!(g.request_link(&ids[1], &ids[3]), Err(LinkRejection::DuplicateGroup));
    }

    #[test]
    fn one_course_per_event() {
        let (mut g, ids) = graph_with(&[NodeKind::Course, NodeKind::Course, NodeKind::Lab]);
        g.request_link(&ids[2], &ids[0]).unwrap();
        assert_eq!(g.request_link(&ids[1], &ids[2]), Err(LinkRejection::DuplicateCourse));
        assert_eq!(g.course_of(&ids[2]), Some(&ids[0]));
    }

    #[test]
    fn self_and_unknown_links() {
        let (mut g, ids) = graph_with(&[NodeKind::Lecturer]);
        assert_eq!(g.request_link(&ids[0], &ids[0]), Err(LinkRejection::SelfLink));
        assert_eq!(
            g.request_link(&ids[0], &NodeId::from("nope")),
            Err(LinkRejection::UnknownNode)
        );
    }

    #[test]
    fn events_of_keeps_link_order() {
        let (mut g, ids) = graph_with(&[NodeKind::Lecture, NodeKind::Lecturer, NodeKind::Lecture]);
        assert_eq!(g.events_of(&ids[1]).unwrap(), &[] as &[NodeId]);
        g.request_link(&ids[1], &ids[2]).unwrap();
        g.request_link(&ids[0], &ids[1]).unwrap();
        assert_eq!(g.events_of(&ids[1]).unwrap(), &[ids[2].clone(), ids[0].clone()]);
        assert!(matches!(g.events_of(&ids[0]), Err(GraphError::WrongClass { .. })));
        assert!(matches!(g.events_of(&NodeId::from("x")), Err(GraphError::UnknownNode(_))));
    }

    #[test]
    fn remove_link_frees_cardinality() {
        let (mut g, ids) = graph_with(&[NodeKind::Lecturer, NodeKind::Lecturer, NodeKind::Lecture]);
        g.request_link(&ids[0], &ids[2]).unwrap();
        assert!(g.remove_link(&ids[2], &ids[0]));
        assert!(!g.remove_link(&ids[2], &ids[0]));
        g.request_link(&ids[1], &ids[2]).unwrap();
        assert_eq!(g.events_of(&ids[0]).unwrap().len(), 0);
    }

    #[test]
    fn wishes_and_precedences_are_validated() {
        let (mut g, ids) = graph_with(&[NodeKind::Lecturer, NodeKind::Lecture, NodeKind::Lab]);
        assert!(g
            .add_wish(Wish {
                resource: ids[1].clone(),
                slot: 0,
                mode: WishMode::Soft
            })
            .is_err());
        assert!(g
            .add_wish(Wish {
                resource: ids[0].clone(),
                slot: 30,
                mode: WishMode::Soft
            })
            .is_err());
        let w = Wish {
            resource: ids[0].clone(),
            slot: 0,
            mode: WishMode::Soft,
        };
        assert_eq!(g.toggle_wish(w.clone()), Ok(true));
        assert_eq!(g.toggle_wish(w), Ok(false));
        assert!(g.wishes().is_empty());
        assert_eq!(
            g.add_precedence(Precedence {
                before: ids[1].clone(),
                after: ids[1].clone(),
                strict: true
            }),
            Err(GraphError::SelfPrecedence)
        );
        assert!(g
            .add_precedence(Precedence {
                before: ids[0].clone(),
                after: ids[1].clone(),
                strict: true
            })
            .is_err());
    }
}
