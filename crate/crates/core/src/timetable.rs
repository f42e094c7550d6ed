//! Weekly per-resource grids built from a solution.

use indexmap::IndexMap;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, NodeId};
use crate::grid::Slot;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TimetableError {
    #[error("event {0} has no assigned slot")]
    MissingAssignment(NodeId),
    #[error("event {event} is assigned slot {slot}, outside the grid")]
    SlotOutOfRange { event: NodeId, slot: Slot },
}

/// `cells[day][slot]` holds the names of the resource's events in that slot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeeklyGrid {
    pub resource: NodeId,
    pub cells: Vec<Vec<Vec<String>>>,
}

impl WeeklyGrid {
    pub fn entries(&self) -> usize {
        self.cells.iter().flatten().map(Vec::len).sum()
    }
}

/// One grid per resource node, in creation order.
pub fn render_grids(assignment: &IndexMap<NodeId, Slot>, graph: &Graph) -> Result<Vec<WeeklyGrid>, TimetableError> {
    let grid = graph.grid();
    let mut out = Vec::new();
    for resource in graph.nodes().filter(|n| n.kind.is_resource()) {
        let mut cells = vec![vec![Vec::new(); grid.slots_per_day() as usize]; grid.days_per_week() as usize];
        for event in graph.neighbors(&resource.id) {
            let slot = *assignment
                .get(event)
                .ok_or_else(|| TimetableError::MissingAssignment(event.clone()))?;
            let (day, in_day) = grid.position(slot).map_err(|_| TimetableError::SlotOutOfRange {
                event: event.clone(),
                slot,
            })?;
            let name = graph.node(event).expect("linked node exists").name.clone();
            cells[day as usize][in_day as usize].push(name);
        }
        out.push(WeeklyGrid {
            resource: resource.id.clone(),
            cells,
        });
    }
    Ok(out)
}

const EMPTY_CELL: &str = "·";

/// Fixed-width table: days as columns, slots as rows. Empty cells show `·`
/// and double bookings are joined with `/`.
pub fn grid_to_text(grid: &WeeklyGrid, graph: &Graph) -> String {
    let days = graph.grid().day_names();
    let slots = graph.grid().slots_per_day() as usize;
    let cell = |d: usize, s: usize| {
        let names = &grid.cells[d][s];
        if names.is_empty() {
            EMPTY_CELL.to_string()
        } else {
            names.join("/")
        }
    };
    let label_width = slots.to_string().len();
    let widths: Vec<usize> = (0..days.len())
        .map(|d| {
            (0..slots)
                .map(|s| cell(d, s).chars().count())
                .chain(std::iter::once(days[d].chars().count()))
                .max()
                .unwrap_or(1)
        })
        .collect();
    let pad = |text: &str, width: usize| {
        let fill = width.saturating_sub(text.chars().count());
        format!("{text}{}", " ".repeat(fill))
    };

    let title = graph
        .node(&grid.resource)
        .map(|n| n.name.as_str())
        .unwrap_or(grid.resource.as_str());
    let mut out = format!("{title}\n");
    let header: Vec<String> = std::iter::once(" ".repeat(label_width))
        .chain(days.iter().zip(&widths).map(|(d, w)| pad(d, *w)))
        .collect();
    out.push_str(header.join(" | ").trim_end());
    out.push('\n');
    for s in 0..slots {
        let row: Vec<String> = std::iter::once(pad(&(s + 1).to_string(), label_width))
            .chain((0..days.len()).map(|d| pad(&cell(d, s), widths[d])))
            .collect();
        out.push_str(row.join(" | ").trim_end());
        out.push('\n');
    }
    out
}
