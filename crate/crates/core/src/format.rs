//! The canonical JSON graph document.
//!
//! Serialization is canonical: nodes and links keep creation order, keys keep
//! a fixed order and empty sections are omitted. Loading replays every link
//! through [`Graph::request_link`], so a document with an illegal link never
//! becomes a [`Graph`].

use std::collections::BTreeSet;

use indexmap::IndexSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, LinkRejection, NodeAttrs, NodeId, NodeKind, Precedence, RoomType, Wish};
use crate::grid::{GridError, Slot, TimeGrid};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error(transparent)]
    Semantic(#[from] SemanticError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticError {
    #[error("link {a}-{b} is illegal: {reason}")]
    IllegalLink { a: NodeId, b: NodeId, reason: LinkRejection },
    #[error("reference to unknown node {0}")]
    DanglingId(NodeId),
    #[error("node {node} uses room type {room_type:?}, which is not declared")]
    UnknownRoomType { node: NodeId, room_type: String },
    #[error("room type {0:?} is declared twice")]
    DuplicateRoomType(String),
    #[error("invalid time grid: {0}")]
    Grid(#[from] GridError),
    #[error(transparent)]
    Graph(GraphError),
}

impl From<GraphError> for SemanticError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::UnknownNode(id) => SemanticError::DanglingId(id),
            GraphError::Grid(g) => SemanticError::Grid(g),
            other => SemanticError::Graph(other),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GridDoc {
    days: u32,
    slots_per_day: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    day_names: Option<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct RoomDoc {
    name: String,
    #[serde(flatten)]
    room: RoomType,
}

#[derive(Debug, Serialize, Deserialize)]
struct NodeDoc {
    id: NodeId,
    kind: NodeKind,
    name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    room_type: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    teaching_load: Option<u32>,
}

#[derive(Debug, Default, Serialize, Deserialize)]
struct PoliciesDoc {
    #[serde(default)]
    global_blocked_slots: BTreeSet<Slot>,
    #[serde(default)]
    extra_day_off: IndexSet<NodeId>,
    #[serde(default)]
    full_day_ban: bool,
}

#[derive(Debug, Serialize, Deserialize)]
struct Document {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    time_grid: Option<GridDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    room_types: Vec<RoomDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    nodes: Vec<NodeDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    links: Vec<[NodeId; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    policies: Option<PoliciesDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    wishes: Vec<Wish>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    precedences: Vec<Precedence>,
}

fn syntax(e: serde_json::Error) -> ParseError {
    ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Parses a UTF-8 JSON graph document.
pub fn parse_graph(text: &[u8]) -> Result<Graph, ParseError> {
    let doc: Document = serde_json::from_slice(text).map_err(syntax)?;
    Ok(build(doc)?)
}

/// Parses a graph document that is already a JSON value (e.g. embedded in a
/// request body).
pub fn parse_graph_value(value: serde_json::Value) -> Result<Graph, ParseError> {
    let doc: Document = serde_json::from_value(value).map_err(syntax)?;
    Ok(build(doc)?)
}

fn build(doc: Document) -> Result<Graph, SemanticError> {
    let grid = match doc.time_grid {
        None => TimeGrid::default(),
        Some(g) => match g.day_names {
            Some(names) => TimeGrid::new(g.days, g.slots_per_day, names)?,
            None => TimeGrid::with_default_names(g.days, g.slots_per_day)?,
        },
    };
    let mut graph = Graph::new(grid);

    for r in doc.room_types {
        if graph.rooms().contains_key(&r.name) {
            return Err(SemanticError::DuplicateRoomType(r.name));
        }
        graph.set_room_type(r.name, r.room.count, r.room.capacity);
    }

    for n in doc.nodes {
        if n.kind.is_event() {
            let room = n
                .room_type
                .as_deref()
                .or_else(|| n.kind.default_room_type())
                .unwrap_or_default();
            if !graph.rooms().contains_key(room) {
                return Err(SemanticError::UnknownRoomType {
                    node: n.id,
                    room_type: room.to_string(),
                });
            }
        }
        graph.insert_node(
            n.id,
            n.kind,
            &n.name,
            NodeAttrs {
                room_type: n.room_type,
                teaching_load: n.teaching_load,
            },
        )?;
    }

    for [a, b] in doc.links {
        match graph.request_link(&a, &b) {
            Ok(()) => {}
            Err(LinkRejection::UnknownNode) => {
                let missing = if graph.node(&a).is_none() { a } else { b };
                return Err(SemanticError::DanglingId(missing));
            }
            Err(reason) => return Err(SemanticError::IllegalLink { a, b, reason }),
        }
    }

    if let Some(p) = doc.policies {
        for slot in p.global_blocked_slots {
            graph.block_slot(slot)?;
        }
        for id in &p.extra_day_off {
            graph.require_day_off(id)?;
        }
        graph.set_full_day_ban(p.full_day_ban);
    }
    for w in doc.wishes {
        graph.add_wish(w)?;
    }
    for p in doc.precedences {
        graph.add_precedence(p)?;
    }
    Ok(graph)
}

fn to_document(graph: &Graph) -> Document {
    let grid = graph.grid();
    let policies = graph.policies();
    Document {
        time_grid: Some(GridDoc {
            days: grid.days_per_week(),
            slots_per_day: grid.slots_per_day(),
            day_names: Some(grid.day_names().to_vec()),
        }),
        room_types: graph
            .rooms()
            .iter()
            .map(|(name, room)| RoomDoc {
                name: name.clone(),
                room: *room,
            })
            .collect(),
        nodes: graph
            .nodes()
            .map(|n| NodeDoc {
                id: n.id.clone(),
                kind: n.kind,
                name: n.name.clone(),
                room_type: n.room_type.clone(),
                teaching_load: n.teaching_load,
            })
            .collect(),
        links: graph
            .links()
            .iter()
            .map(|(a, b)| [a.clone(), b.clone()])
            .collect(),
        policies: (!policies.is_default()).then(|| PoliciesDoc {
            global_blocked_slots: policies.global_blocked_slots.clone(),
            extra_day_off: policies.extra_day_off.clone(),
            full_day_ban: policies.full_day_ban,
        }),
        wishes: graph.wishes().to_vec(),
        precedences: graph.precedences().to_vec(),
    }
}

/// Canonical pretty-printed JSON for a graph.
pub fn serialize_graph(graph: &Graph) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(&to_document(graph)).expect("document serializes");
    out.push(b'\n');
    out
}

/// The canonical document as a JSON value.
pub fn graph_to_value(graph: &Graph) -> serde_json::Value {
    serde_json::to_value(to_document(graph)).expect("document serializes")
}
