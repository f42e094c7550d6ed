//! Post-hoc verification of a complete assignment, by direct evaluation of
//! each constraint's definition.

use std::fmt;

use crate::grid::Slot;
use crate::model::{Constraint, ConstraintModel};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Index of the violated constraint, when one is to blame.
    pub constraint: Option<usize>,
    pub reason: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.constraint {
            Some(i) => write!(f, "constraint {i}: {}", self.reason),
            None => f.write_str(&self.reason),
        }
    }
}

impl std::error::Error for Violation {}

fn violation(constraint: Option<usize>, reason: impl Into<String>) -> Violation {
    Violation {
        constraint,
        reason: reason.into(),
    }
}

/// Checks `slots` (one per event variable, in order) against every
/// constraint and returns the achieved score.
///
/// Auxiliary values are derived from their defining constraints (counts from
/// `count`/`count_interval`, flags from reifications, totals from sums) and
/// then every constraint is re-evaluated.
pub fn check_assignment(model: &ConstraintModel, slots: &[Slot]) -> Result<u32, Violation> {
    if slots.len() != model.vars.len() {
        return Err(violation(
            None,
            format!("expected {} values, got {}", model.vars.len(), slots.len()),
        ));
    }
    for (var, &slot) in model.vars.iter().zip(slots) {
        if !var.domain.contains(slot) {
            return Err(violation(None, format!("{} = {slot} is outside its domain", var.name)));
        }
    }
    let aux = derive_aux(model, slots)?;
    for (i, (a, value)) in model.aux.iter().zip(&aux).enumerate() {
        if *value < a.lo as i64 || *value > a.hi as i64 {
            return Err(violation(
                None,
                format!("auxiliary {} (#{i}) = {value} is outside [{}, {}]", a.name, a.lo, a.hi),
            ));
        }
    }
    for (i, c) in model.constraints.iter().enumerate() {
        if !holds(model, c, slots, &aux) {
            return Err(violation(Some(i), format!("{c:?} does not hold")));
        }
    }
    Ok(model.objective.map(|o| aux[o.0] as u32).unwrap_or(0))
}

fn members<'a>(model: &'a ConstraintModel, c: &Constraint, slots: &'a [Slot]) -> impl Iterator<Item = Slot> + 'a {
    c.event_vars(model).into_iter().map(move |v| slots[v.0])
}

fn holds(model: &ConstraintModel, c: &Constraint, slots: &[Slot], aux: &[i64]) -> bool {
    match c {
        Constraint::AllDifferent(_) => {
            let values: Vec<Slot> = members(model, c, slots).collect();
            values
                .iter()
                .enumerate()
                .all(|(i, a)| values[i + 1..].iter().all(|b| a != b))
        }
        Constraint::CapacityPerSlot { limit, .. } => {
            let values: Vec<Slot> = members(model, c, slots).collect();
            values
                .iter()
                .all(|v| values.iter().filter(|w| *w == v).count() <= *limit as usize)
        }
        Constraint::CountEq { value, count, .. } => {
            members(model, c, slots).filter(|s| s == value).count() as i64 == aux[count.0]
        }
        Constraint::CountInterval { lo, hi, count, .. } => {
            members(model, c, slots).filter(|s| lo <= s && s <= hi).count() as i64 == aux[count.0]
        }
        Constraint::ReifyIsZero { count, flag } => aux[flag.0] == (aux[count.0] == 0) as i64,
        Constraint::ReifyNonZero { count, flag } => aux[flag.0] == (aux[count.0] != 0) as i64,
        Constraint::LinearLeq { terms, bound } => terms.iter().map(|t| aux[t.0]).sum::<i64>() <= *bound as i64,
        Constraint::SumEq { total, terms } => terms.iter().map(|t| aux[t.0]).sum::<i64>() == aux[total.0],
        Constraint::Precedence { before, after, strict } => {
            let (a, b) = (slots[before.0], slots[after.0]);
            if *strict {
                a < b
            } else {
                a <= b
            }
        }
    }
}

fn derive_aux(model: &ConstraintModel, slots: &[Slot]) -> Result<Vec<i64>, Violation> {
    let mut aux: Vec<Option<i64>> = vec![None; model.aux.len()];
    loop {
        let mut progress = false;
        for c in &model.constraints {
            let (target, value) = match c {
                Constraint::CountEq { value, count, .. } => {
                    (count, Some(members(model, c, slots).filter(|s| s == value).count() as i64))
                }
                Constraint::CountInterval { lo, hi, count, .. } => (
                    count,
                    Some(members(model, c, slots).filter(|s| lo <= s && s <= hi).count() as i64),
                ),
                Constraint::ReifyIsZero { count, flag } => (flag, aux[count.0].map(|n| (n == 0) as i64)),
                Constraint::ReifyNonZero { count, flag } => (flag, aux[count.0].map(|n| (n != 0) as i64)),
                Constraint::SumEq { total, terms } => {
                    (total, terms.iter().map(|t| aux[t.0]).sum::<Option<i64>>())
                }
                _ => continue,
            };
            if aux[target.0].is_none() {
                if let Some(v) = value {
                    aux[target.0] = Some(v);
                    progress = true;
                }
            }
        }
        if !progress {
            break;
        }
    }
    aux.into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| {
                violation(
                    None,
                    format!("auxiliary {} has no defining constraint", model.aux[i].name),
                )
            })
        })
        .collect()
}
