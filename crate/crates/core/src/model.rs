//! The finite-domain constraint model: the compiler's output and the
//! solver's input.
//!
//! Event variables range over slot indices. Auxiliary integer variables hold
//! counts, reified booleans and the score. Constraints over a resource's
//! events refer to a named [`ResourceList`] so that the emitted program can
//! print `NAME = [...]` once and reuse the name.

use serde::Serialize;
use thiserror::Error;

use crate::domain::DomainSet;
use crate::graph::NodeId;
use crate::grid::{Slot, TimeGrid};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VarId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AuxId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ListId(pub usize);

/// One slot variable per event node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventVar {
    pub name: String,
    pub event: NodeId,
    pub domain: DomainSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AuxRole {
    /// Number of list members meeting a condition.
    Count,
    /// 0/1: the resource has at least one event on that day.
    DayUsed,
    /// 0/1: a soft wish is satisfied.
    WishFlag,
    /// Sum of satisfied wish flags.
    Score,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxVar {
    pub name: String,
    pub lo: u32,
    pub hi: u32,
    pub role: AuxRole,
    /// Resource the variable was derived from, if any.
    pub resource: Option<NodeId>,
}

impl AuxVar {
    pub fn is_boolean(&self) -> bool {
        matches!(self.role, AuxRole::DayUsed | AuxRole::WishFlag)
    }
}

/// The events of one resource under a program-level name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResourceList {
    pub name: String,
    pub resource: Option<NodeId>,
    pub members: Vec<VarId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constraint {
    /// Members take pairwise distinct slots.
    AllDifferent(ListId),
    /// At most `limit` of `vars` share any one slot (unit-duration cumulative).
    CapacityPerSlot {
        room_type: String,
        vars: Vec<VarId>,
        limit: u32,
    },
    /// `count = |{m in list : m = value}|`.
    CountEq { list: ListId, value: Slot, count: AuxId },
    /// `count = |{m in list : lo <= m <= hi}|`.
    CountInterval {
        list: ListId,
        lo: Slot,
        hi: Slot,
        count: AuxId,
    },
    /// `flag <=> count = 0`.
    ReifyIsZero { count: AuxId, flag: AuxId },
    /// `flag <=> count != 0`.
    ReifyNonZero { count: AuxId, flag: AuxId },
    /// `sum(terms) <= bound`.
    LinearLeq { terms: Vec<AuxId>, bound: u32 },
    /// `total = sum(terms)`.
    SumEq { total: AuxId, terms: Vec<AuxId> },
    /// `before <= after`, or `before < after` when strict.
    Precedence { before: VarId, after: VarId, strict: bool },
}

impl Constraint {
    /// Event variables the constraint reads, including list members.
    pub fn event_vars(&self, model: &ConstraintModel) -> Vec<VarId> {
        match self {
            Constraint::AllDifferent(l) | Constraint::CountEq { list: l, .. } | Constraint::CountInterval { list: l, .. } => {
                model.lists[l.0].members.clone()
            }
            Constraint::CapacityPerSlot { vars, .. } => vars.clone(),
            Constraint::Precedence { before, after, .. } => vec![*before, *after],
            _ => Vec::new(),
        }
    }

    pub fn aux_vars(&self) -> Vec<AuxId> {
        match self {
            Constraint::CountEq { count, .. } | Constraint::CountInterval { count, .. } => vec![*count],
            Constraint::ReifyIsZero { count, flag } | Constraint::ReifyNonZero { count, flag } => vec![*count, *flag],
            Constraint::LinearLeq { terms, .. } => terms.clone(),
            Constraint::SumEq { total, terms } => std::iter::once(*total).chain(terms.iter().copied()).collect(),
            _ => Vec::new(),
        }
    }

    pub fn list(&self) -> Option<ListId> {
        match self {
            Constraint::AllDifferent(l) | Constraint::CountEq { list: l, .. } | Constraint::CountInterval { list: l, .. } => {
                Some(*l)
            }
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("constraint {index} refers to an undeclared variable or list")]
    UndeclaredReference { index: usize },
    #[error("constraint {index} has an empty interval")]
    EmptyInterval { index: usize },
    #[error("auxiliary variable {0} has lo > hi")]
    BadAuxBounds(usize),
    #[error("variable {0} has a domain outside the grid")]
    DomainOutsideGrid(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintModel {
    pub grid: TimeGrid,
    pub vars: Vec<EventVar>,
    pub lists: Vec<ResourceList>,
    pub aux: Vec<AuxVar>,
    pub constraints: Vec<Constraint>,
    /// One flag per soft wish, in wish order.
    pub flags: Vec<AuxId>,
    /// Score to maximize; present iff there is at least one soft wish.
    pub objective: Option<AuxId>,
}

impl ConstraintModel {
    pub fn new(grid: TimeGrid) -> Self {
        Self {
            grid,
            vars: Vec::new(),
            lists: Vec::new(),
            aux: Vec::new(),
            constraints: Vec::new(),
            flags: Vec::new(),
            objective: None,
        }
    }

    pub fn add_var(&mut self, name: impl Into<String>, event: NodeId, domain: DomainSet) -> VarId {
        self.vars.push(EventVar {
            name: name.into(),
            event,
            domain,
        });
        VarId(self.vars.len() - 1)
    }

    pub fn add_list(&mut self, name: impl Into<String>, resource: Option<NodeId>, members: Vec<VarId>) -> ListId {
        self.lists.push(ResourceList {
            name: name.into(),
            resource,
            members,
        });
        ListId(self.lists.len() - 1)
    }

    pub fn add_aux(&mut self, name: impl Into<String>, lo: u32, hi: u32, role: AuxRole, resource: Option<NodeId>) -> AuxId {
        self.aux.push(AuxVar {
            name: name.into(),
            lo,
            hi,
            role,
            resource,
        });
        AuxId(self.aux.len() - 1)
    }

    pub fn post(&mut self, constraint: Constraint) {
        self.constraints.push(constraint);
    }

    pub fn var(&self, id: VarId) -> &EventVar {
        &self.vars[id.0]
    }

    pub fn aux_var(&self, id: AuxId) -> &AuxVar {
        &self.aux[id.0]
    }

    pub fn list(&self, id: ListId) -> &ResourceList {
        &self.lists[id.0]
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty() && self.constraints.is_empty()
    }

    /// Number of constraints mentioning each event variable.
    pub fn static_degrees(&self) -> Vec<u32> {
        let mut degree = vec![0u32; self.vars.len()];
        for c in &self.constraints {
            let mut vars = c.event_vars(self);
            vars.sort_unstable();
            vars.dedup();
            for v in vars {
                degree[v.0] += 1;
            }
        }
        degree
    }

    /// Checks every reference and bound.
    pub fn validate(&self) -> Result<(), ModelError> {
        let total = self.grid.total_slots();
        for (i, v) in self.vars.iter().enumerate() {
            if v.domain.max().is_some_and(|m| m >= total) {
                return Err(ModelError::DomainOutsideGrid(i));
            }
        }
        for (i, a) in self.aux.iter().enumerate() {
            if a.lo > a.hi {
                return Err(ModelError::BadAuxBounds(i));
            }
        }
        let var_ok = |v: &VarId| v.0 < self.vars.len();
        let aux_ok = |a: &AuxId| a.0 < self.aux.len();
        for list in &self.lists {
            if !list.members.iter().all(var_ok) {
                return Err(ModelError::UndeclaredReference { index: usize::MAX });
            }
        }
        for (index, c) in self.constraints.iter().enumerate() {
            let list_ok = c.list().is_none_or(|l| l.0 < self.lists.len());
            let vars_ok = match c {
                Constraint::CapacityPerSlot { vars, .. } => vars.iter().all(var_ok),
                Constraint::Precedence { before, after, .. } => var_ok(before) && var_ok(after),
                _ => true,
            };
            if !(list_ok && vars_ok && c.aux_vars().iter().all(aux_ok)) {
                return Err(ModelError::UndeclaredReference { index });
            }
            if let Constraint::CountInterval { lo, hi, .. } = c {
                if lo > hi {
                    return Err(ModelError::EmptyInterval { index });
                }
            }
        }
        if self.flags.iter().chain(self.objective.iter()).any(|a| !aux_ok(a)) {
            return Err(ModelError::UndeclaredReference { index: usize::MAX });
        }
        Ok(())
    }
}
