//! Propagators and the fixpoint engine.
//!
//! The slice-level functions (`propagate_all_different`, ...) work on plain
//! domain vectors so they can be tested in isolation; [`Engine`] wires them
//! to a model with per-variable watch lists.

use std::collections::VecDeque;

use crate::domain::DomainSet;
use crate::model::{Constraint, ConstraintModel};

/// A propagator emptied a domain or found the constraint unsatisfiable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Failure;

pub type PropResult = Result<(), Failure>;

/// Inclusive bounds of an auxiliary integer variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub lo: u32,
    pub hi: u32,
}

impl Bounds {
    pub fn new(lo: u32, hi: u32) -> Self {
        Self { lo, hi }
    }

    pub fn is_fixed(self) -> bool {
        self.lo == self.hi
    }

    fn raise(&mut self, lo: i64) -> PropResult {
        if lo > self.lo as i64 {
            self.lo = lo.min(u32::MAX as i64) as u32;
        }
        self.check()
    }

    fn lower(&mut self, hi: i64) -> PropResult {
        if hi < 0 {
            return Err(Failure);
        }
        if hi < self.hi as i64 {
            self.hi = hi as u32;
        }
        self.check()
    }

    fn check(self) -> PropResult {
        if self.lo > self.hi {
            Err(Failure)
        } else {
            Ok(())
        }
    }
}

/// Singleton elimination to fixpoint, then a pigeonhole check on the union
/// of all domains.
pub fn propagate_all_different(domains: &mut [DomainSet]) -> PropResult {
    let mut settled = DomainSet::EMPTY;
    loop {
        let mut fixed = DomainSet::EMPTY;
        for d in domains.iter() {
            if d.is_empty() {
                return Err(Failure);
            }
            if let Some(v) = d.value() {
                if fixed.contains(v) {
                    return Err(Failure);
                }
                fixed.insert(v);
            }
        }
        let fresh = fixed.difference(settled);
        if fresh.is_empty() {
            break;
        }
        for d in domains.iter_mut() {
            if !d.is_singleton() {
                *d = d.difference(fresh);
            }
        }
        settled = fixed;
    }
    let union = domains.iter().fold(DomainSet::EMPTY, |u, d| u.union(*d));
    if (union.len() as usize) < domains.len() {
        return Err(Failure);
    }
    Ok(())
}

/// At most `limit` variables may take any single value.
pub fn propagate_capacity(domains: &mut [DomainSet], limit: u32) -> PropResult {
    loop {
        let mut counts = [0u32; 128];
        let mut union = DomainSet::EMPTY;
        for d in domains.iter() {
            if d.is_empty() {
                return Err(Failure);
            }
            union = union.union(*d);
            if let Some(v) = d.value() {
                counts[v as usize] += 1;
            }
        }
        if domains.len() as u64 > union.len() as u64 * limit as u64 {
            return Err(Failure);
        }
        let mut full = DomainSet::EMPTY;
        for v in union.iter() {
            match counts[v as usize].cmp(&limit) {
                std::cmp::Ordering::Greater => return Err(Failure),
                std::cmp::Ordering::Equal => full.insert(v),
                std::cmp::Ordering::Less => {}
            }
        }
        let mut changed = false;
        for d in domains.iter_mut() {
            if !d.is_singleton() && !d.intersect(full).is_empty() {
                *d = d.difference(full);
                changed = true;
            }
        }
        if !changed {
            return Ok(());
        }
    }
}

/// `count = |{i : domains[i] ⊆ target}|` where a member counts once it can
/// only take values in `target`.
pub fn propagate_count(domains: &mut [DomainSet], target: DomainSet, count: &mut Bounds) -> PropResult {
    let mut certain = 0u32;
    let mut possible = 0u32;
    for d in domains.iter() {
        if d.is_empty() {
            return Err(Failure);
        }
        if d.is_subset(target) {
            certain += 1;
        }
        if !d.intersect(target).is_empty() {
            possible += 1;
        }
    }
    count.raise(certain as i64)?;
    count.lower(possible as i64)?;
    if certain == possible {
        return Ok(());
    }
    if count.hi == certain {
        for d in domains.iter_mut() {
            if !d.is_subset(target) {
                *d = d.difference(target);
            }
        }
    } else if count.lo == possible {
        for d in domains.iter_mut() {
            if !d.intersect(target).is_empty() {
                *d = d.intersect(target);
            }
        }
    }
    Ok(())
}

/// `flag <=> (count = 0)` when `zero` is true, `flag <=> (count != 0)` otherwise.
pub fn propagate_reify(count: &mut Bounds, flag: &mut Bounds, zero: bool) -> PropResult {
    flag.lower(1)?;
    // Truth of "count is nonzero", when decided.
    let nonzero = if count.lo > 0 {
        Some(true)
    } else if count.hi == 0 {
        Some(false)
    } else {
        None
    };
    if let Some(nz) = nonzero {
        let f = if zero { !nz } else { nz } as u32;
        flag.raise(f as i64)?;
        flag.lower(f as i64)?;
    }
    if flag.is_fixed() {
        let nz = (flag.lo == 1) != zero;
        if nz {
            count.raise(1)?;
        } else {
            count.lower(0)?;
        }
    }
    Ok(())
}

/// `sum(terms) <= bound`.
pub fn propagate_linear_leq(terms: &mut [Bounds], bound: u32) -> PropResult {
    let sum_lo: i64 = terms.iter().map(|t| t.lo as i64).sum();
    if sum_lo > bound as i64 {
        return Err(Failure);
    }
    for t in terms.iter_mut() {
        let slack = bound as i64 - (sum_lo - t.lo as i64);
        t.lower(slack)?;
    }
    Ok(())
}

/// `total = sum(terms)`, bounds reasoning in both directions.
pub fn propagate_sum_eq(total: &mut Bounds, terms: &mut [Bounds]) -> PropResult {
    let sum_lo: i64 = terms.iter().map(|t| t.lo as i64).sum();
    let sum_hi: i64 = terms.iter().map(|t| t.hi as i64).sum();
    total.raise(sum_lo)?;
    total.lower(sum_hi)?;
    for t in terms.iter_mut() {
        let (lo, hi) = (t.lo as i64, t.hi as i64);
        t.raise(total.lo as i64 - (sum_hi - hi))?;
        t.lower(total.hi as i64 - (sum_lo - lo))?;
    }
    Ok(())
}

/// Bounds consistency for `before <= after` (`before < after` when strict).
pub fn propagate_precedence(before: &mut DomainSet, after: &mut DomainSet, strict: bool) -> PropResult {
    let gap = strict as u32;
    let (Some(after_max), Some(before_min)) = (after.max(), before.min()) else {
        return Err(Failure);
    };
    if after_max < gap {
        return Err(Failure);
    }
    *before = before.intersect(DomainSet::range(0, after_max - gap));
    *after = after.difference(DomainSet::full((before_min + gap).min(128)));
    if before.is_empty() || after.is_empty() {
        return Err(Failure);
    }
    Ok(())
}

/// Search-time variable store.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct State {
    pub events: Vec<DomainSet>,
    pub aux: Vec<Bounds>,
}

impl State {
    pub fn initial(model: &ConstraintModel) -> Self {
        Self {
            events: model.vars.iter().map(|v| v.domain).collect(),
            aux: model.aux.iter().map(|a| Bounds::new(a.lo, a.hi)).collect(),
        }
    }
}

/// Runs propagators to a common fixpoint.
pub struct Engine<'m> {
    model: &'m ConstraintModel,
    event_watchers: Vec<Vec<usize>>,
    aux_watchers: Vec<Vec<usize>>,
    members: Vec<Vec<usize>>,
}

impl<'m> Engine<'m> {
    pub fn new(model: &'m ConstraintModel) -> Self {
        let mut event_watchers = vec![Vec::new(); model.vars.len()];
        let mut aux_watchers = vec![Vec::new(); model.aux.len()];
        let mut members = Vec::with_capacity(model.constraints.len());
        for (i, c) in model.constraints.iter().enumerate() {
            let vars: Vec<usize> = c.event_vars(model).into_iter().map(|v| v.0).collect();
            let mut unique = vars.clone();
            unique.sort_unstable();
            unique.dedup();
            for v in unique {
                event_watchers[v].push(i);
            }
            let mut aux: Vec<usize> = c.aux_vars().into_iter().map(|a| a.0).collect();
            aux.sort_unstable();
            aux.dedup();
            for a in aux {
                aux_watchers[a].push(i);
            }
            members.push(vars);
        }
        Self {
            model,
            event_watchers,
            aux_watchers,
            members,
        }
    }

    pub fn event_watchers(&self, var: usize) -> &[usize] {
        &self.event_watchers[var]
    }

    pub fn aux_watchers(&self, aux: usize) -> &[usize] {
        &self.aux_watchers[aux]
    }

    /// Propagates every constraint.
    pub fn propagate_all(&self, state: &mut State) -> PropResult {
        self.propagate(state, 0..self.model.constraints.len())
    }

    /// Propagates starting from the given constraints until nothing changes.
    pub fn propagate(&self, state: &mut State, seeds: impl IntoIterator<Item = usize>) -> PropResult {
        let n = self.model.constraints.len();
        let mut queued = vec![false; n];
        let mut queue = VecDeque::new();
        for c in seeds {
            if !queued[c] {
                queued[c] = true;
                queue.push_back(c);
            }
        }
        let mut changed_events = Vec::new();
        let mut changed_aux = Vec::new();
        while let Some(c) = queue.pop_front() {
            queued[c] = false;
            changed_events.clear();
            changed_aux.clear();
            self.run(c, state, &mut changed_events, &mut changed_aux)?;
            let wake = changed_events
                .iter()
                .flat_map(|v| &self.event_watchers[*v])
                .chain(changed_aux.iter().flat_map(|a| &self.aux_watchers[*a]));
            for &w in wake {
                if !queued[w] {
                    queued[w] = true;
                    queue.push_back(w);
                }
            }
        }
        Ok(())
    }

    fn run(&self, index: usize, state: &mut State, events: &mut Vec<usize>, aux: &mut Vec<usize>) -> PropResult {
        let vars = &self.members[index];
        let mut doms: Vec<DomainSet> = vars.iter().map(|v| state.events[*v]).collect();
        match &self.model.constraints[index] {
            Constraint::AllDifferent(_) => propagate_all_different(&mut doms)?,
            Constraint::CapacityPerSlot { limit, .. } => propagate_capacity(&mut doms, *limit)?,
            Constraint::CountEq { value, count, .. } => {
                let mut b = state.aux[count.0];
                propagate_count(&mut doms, DomainSet::singleton(*value), &mut b)?;
                store_aux(state, count.0, b, aux);
            }
            Constraint::CountInterval { lo, hi, count, .. } => {
                let mut b = state.aux[count.0];
                propagate_count(&mut doms, DomainSet::range(*lo, *hi), &mut b)?;
                store_aux(state, count.0, b, aux);
            }
            Constraint::ReifyIsZero { count, flag } | Constraint::ReifyNonZero { count, flag } => {
                let zero = matches!(self.model.constraints[index], Constraint::ReifyIsZero { .. });
                let (mut c, mut f) = (state.aux[count.0], state.aux[flag.0]);
                propagate_reify(&mut c, &mut f, zero)?;
                store_aux(state, count.0, c, aux);
                store_aux(state, flag.0, f, aux);
            }
            Constraint::LinearLeq { terms, bound } => {
                let mut b: Vec<Bounds> = terms.iter().map(|t| state.aux[t.0]).collect();
                propagate_linear_leq(&mut b, *bound)?;
                for (t, nb) in terms.iter().zip(b) {
                    store_aux(state, t.0, nb, aux);
                }
            }
            Constraint::SumEq { total, terms } => {
                let mut tot = state.aux[total.0];
                let mut b: Vec<Bounds> = terms.iter().map(|t| state.aux[t.0]).collect();
                propagate_sum_eq(&mut tot, &mut b)?;
                store_aux(state, total.0, tot, aux);
                for (t, nb) in terms.iter().zip(b) {
                    store_aux(state, t.0, nb, aux);
                }
            }
            Constraint::Precedence { strict, .. } => {
                let (mut a, mut b) = (doms[0], doms[1]);
                propagate_precedence(&mut a, &mut b, *strict)?;
                doms[0] = a;
                doms[1] = b;
            }
        }
        for (v, d) in vars.iter().zip(doms) {
            if d.is_empty() {
                return Err(Failure);
            }
            if state.events[*v] != d {
                // A variable listed twice keeps the tighter of its copies.
                let merged = state.events[*v].intersect(d);
                if merged.is_empty() {
                    return Err(Failure);
                }
                state.events[*v] = merged;
                events.push(*v);
            }
        }
        Ok(())
    }
}

fn store_aux(state: &mut State, index: usize, bounds: Bounds, changed: &mut Vec<usize>) {
    let current = state.aux[index];
    let merged = Bounds::new(current.lo.max(bounds.lo), current.hi.min(bounds.hi));
    if merged != current {
        state.aux[index] = merged;
        changed.push(index);
    }
}
