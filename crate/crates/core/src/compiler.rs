//! Lowering a validated [`Graph`] into a [`ConstraintModel`].
//!
//! Blocks are produced in a fixed order: event variables, per-resource
//! all-different lists, room capacities, extra-day-off policies, the
//! full-day ban, soft wishes, precedences and finally the score. Within a
//! block, nodes are visited in creation order so the output is stable.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::checks::{has_errors, static_checks, Finding};
use crate::domain::DomainSet;
use crate::graph::{Graph, NodeId, NodeKind, WishMode};
use crate::model::{AuxId, AuxRole, Constraint, ConstraintModel, ListId, VarId};
use crate::naming::{variable_name, Namer};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct CompileError {
    pub findings: Vec<Finding>,
}

impl fmt::Display for CompileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "static checks failed")?;
        for finding in self.findings.iter().filter(|f| f.severity == crate::checks::Severity::Error) {
            write!(f, "; {} on {}: {}", finding.code, finding.node, finding.message)?;
        }
        Ok(())
    }
}

/// Compiles the graph, refusing if static checks report an error.
pub fn compile(graph: &Graph) -> Result<ConstraintModel, CompileError> {
    let findings = static_checks(graph);
    if has_errors(&findings) {
        return Err(CompileError { findings });
    }
    Ok(Lowering::new(graph).run())
}

struct Lowering<'g> {
    graph: &'g Graph,
    model: ConstraintModel,
    names: Namer,
    var_of: HashMap<NodeId, VarId>,
    list_of: HashMap<NodeId, ListId>,
}

impl<'g> Lowering<'g> {
    fn new(graph: &'g Graph) -> Self {
        Self {
            graph,
            model: ConstraintModel::new(graph.grid().clone()),
            names: Namer::new(),
            var_of: HashMap::new(),
            list_of: HashMap::new(),
        }
    }

    fn run(mut self) -> ConstraintModel {
        self.declare_variables();
        self.resource_lists();
        self.room_capacities();
        self.days_off();
        self.full_day_ban();
        self.wishes();
        self.precedences();
        self.score();
        self.model
    }

    fn declare_variables(&mut self) {
        let graph = self.graph;
        let total = graph.grid().total_slots();
        let blocked: DomainSet = graph.policies().global_blocked_slots.iter().copied().collect();
        for node in graph.nodes().filter(|n| n.kind.is_event()) {
            let mut domain = DomainSet::full(total).difference(blocked);
            for resource in graph.resources_of(&node.id) {
                for wish in graph
                    .wishes()
                    .iter()
                    .filter(|w| w.mode == WishMode::Hard && w.resource == resource.id)
                {
                    domain.remove(wish.slot);
                }
            }
            let name = self.names.fresh(&variable_name(graph, node));
            let var = self.model.add_var(name, node.id.clone(), domain);
            self.var_of.insert(node.id.clone(), var);
        }
    }

    fn resource_lists(&mut self) {
        let graph = self.graph;
        for node in graph.nodes().filter(|n| n.kind.is_resource()) {
            let members: Vec<VarId> = graph.neighbors(&node.id).iter().map(|e| self.var_of[e]).collect();
            let name = self.names.fresh(&variable_name(graph, node));
            let distinct = members.len() >= 2;
            let list = self.model.add_list(name, Some(node.id.clone()), members);
            self.list_of.insert(node.id.clone(), list);
            if distinct {
                self.model.post(Constraint::AllDifferent(list));
            }
        }
    }

    fn room_capacities(&mut self) {
        let graph = self.graph;
        for (room, entry) in graph.rooms() {
            let vars: Vec<VarId> = graph
                .nodes()
                .filter(|n| n.kind.is_event() && n.room_type.as_deref() == Some(room.as_str()))
                .map(|n| self.var_of[&n.id])
                .collect();
            if !vars.is_empty() && (entry.count as usize) < vars.len() {
                self.model.post(Constraint::CapacityPerSlot {
                    room_type: room.clone(),
                    vars,
                    limit: entry.count,
                });
            }
        }
    }

    fn count_var(&mut self, resource: &NodeId, base: String) -> AuxId {
        let list = self.list_of[resource];
        let hi = self.model.list(list).members.len() as u32;
        let name = self.names.fresh(&base);
        self.model
            .add_aux(name, 0, hi, AuxRole::Count, Some(resource.clone()))
    }

    fn days_off(&mut self) {
        let graph = self.graph;
        let grid = graph.grid().clone();
        let flagged = &graph.policies().extra_day_off;
        for node in graph.nodes().filter(|n| flagged.contains(&n.id)) {
            let list = self.list_of[&node.id];
            let list_name = self.model.list(list).name.clone();
            let mut used_days = Vec::new();
            for day in 0..grid.days_per_week() {
                let (lo, hi) = grid.day_bounds(day);
                let count = self.count_var(&node.id, format!("{list_name}D{day}C"));
                let used_name = self.names.fresh(&format!("{list_name}D{day}"));
                let used = self
                    .model
                    .add_aux(used_name, 0, 1, AuxRole::DayUsed, Some(node.id.clone()));
                self.model.post(Constraint::CountInterval { list, lo, hi, count });
                self.model.post(Constraint::ReifyNonZero { count, flag: used });
                used_days.push(used);
            }
            self.model.post(Constraint::LinearLeq {
                terms: used_days,
                bound: grid.days_per_week() - 1,
            });
        }
    }

    fn full_day_ban(&mut self) {
        let graph = self.graph;
        let grid = graph.grid().clone();
        // A one-slot day has no distinct first and last slot.
        if !graph.policies().full_day_ban || grid.slots_per_day() < 2 {
            return;
        }
        for node in graph.nodes().filter(|n| n.kind == NodeKind::StudyGroup) {
            let list = self.list_of[&node.id];
            let list_name = self.model.list(list).name.clone();
            for day in 0..grid.days_per_week() {
                let (first, last) = grid.day_bounds(day);
                let mut ends = Vec::with_capacity(2);
                for slot in [first, last] {
                    let count = self.count_var(&node.id, format!("{list_name}S{slot}C"));
                    self.model.post(Constraint::CountEq { list, value: slot, count });
                    ends.push(count);
                }
                self.model.post(Constraint::LinearLeq { terms: ends, bound: 1 });
            }
        }
    }

    fn wishes(&mut self) {
        let graph = self.graph;
        let soft = graph.wishes().iter().filter(|w| w.mode == WishMode::Soft);
        for (k, wish) in soft.enumerate() {
            let list = self.list_of[&wish.resource];
            let count = self.count_var(&wish.resource, format!("SCOUNT{k}"));
            let flag_name = self.names.fresh(&format!("SCON{k}"));
            let flag = self
                .model
                .add_aux(flag_name, 0, 1, AuxRole::WishFlag, Some(wish.resource.clone()));
            self.model.post(Constraint::CountEq {
                list,
                value: wish.slot,
                count,
            });
            self.model.post(Constraint::ReifyIsZero { count, flag });
            self.model.flags.push(flag);
        }
    }

    fn precedences(&mut self) {
        for p in self.graph.precedences() {
            self.model.post(Constraint::Precedence {
                before: self.var_of[&p.before],
                after: self.var_of[&p.after],
                strict: p.strict,
            });
        }
    }

    fn score(&mut self) {
        if self.model.flags.is_empty() {
            return;
        }
        let name = self.names.fresh("SCONS");
        let m = self.model.flags.len() as u32;
        let total = self.model.add_aux(name, 0, m, AuxRole::Score, None);
        self.model.post(Constraint::SumEq {
            total,
            terms: self.model.flags.clone(),
        });
        self.model.objective = Some(total);
    }
}
