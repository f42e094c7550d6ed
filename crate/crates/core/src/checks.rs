//! Static checks run before compilation.

use serde::Serialize;

use crate::graph::{Graph, NodeId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Severity {
    Warning,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub severity: Severity,
    pub code: &'static str,
    pub node: NodeId,
    pub message: String,
}

pub const TEACHING_LOAD_EXCEEDED: &str = "TEACHING_LOAD_EXCEEDED";
pub const UNLINKED_EVENT: &str = "UNLINKED_EVENT";
pub const NO_ROOMS: &str = "NO_ROOMS";

/// Findings sorted by the creation order of the node they concern.
///
/// * `TEACHING_LOAD_EXCEEDED` (error): a resource has more events than its load.
/// * `UNLINKED_EVENT` (warning): an event with no resource link.
/// * `NO_ROOMS` (warning): a room type with zero rooms that some event needs,
///   reported on the first such event.
pub fn static_checks(graph: &Graph) -> Vec<Finding> {
    let mut findings = Vec::new();
    for node in graph.nodes() {
        if node.kind.is_resource() {
            let linked = graph.neighbors(&node.id).len();
            if let Some(load) = node.teaching_load {
                if linked > load as usize {
                    findings.push(Finding {
                        severity: Severity::Error,
                        code: TEACHING_LOAD_EXCEEDED,
                        node: node.id.clone(),
                        message: format!("{} has {linked} events but a teaching load of {load}", node.name),
                    });
                }
            }
        } else if node.kind.is_event() && graph.resources_of(&node.id).next().is_none() {
            findings.push(Finding {
                severity: Severity::Warning,
                code: UNLINKED_EVENT,
                node: node.id.clone(),
                message: format!("{} is not linked to any lecturer, teaching assistant or group", node.name),
            });
        }
    }
    for (room, entry) in graph.rooms() {
        if entry.count > 0 {
            continue;
        }
        if let Some(first) = graph
            .nodes()
            .find(|n| n.kind.is_event() && n.room_type.as_deref() == Some(room.as_str()))
        {
            findings.push(Finding {
                severity: Severity::Warning,
                code: NO_ROOMS,
                node: first.id.clone(),
                message: format!("no rooms of type {room} are available but events need one"),
            });
        }
    }
    findings.sort_by_key(|f| graph.position(&f.node));
    findings
}

pub fn has_errors(findings: &[Finding]) -> bool {
    findings.iter().any(|f| f.severity == Severity::Error)
}
