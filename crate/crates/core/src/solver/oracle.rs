//! Exhaustive enumeration, for testing the search against.

use thiserror::Error;

use super::check::check_assignment;
use crate::grid::Slot;
use crate::model::ConstraintModel;

/// Largest search space the oracle will enumerate.
pub const ORACLE_LIMIT: u128 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search space of {0} assignments exceeds the oracle limit")]
pub struct TooLarge(pub u128);

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OracleSolution {
    pub slots: Vec<Slot>,
    pub score: u32,
}

/// Every satisfying assignment, in lexicographic order of slot vectors.
pub fn brute_force_oracle(model: &ConstraintModel) -> Result<Vec<OracleSolution>, TooLarge> {
    let domains: Vec<Vec<Slot>> = model.vars.iter().map(|v| v.domain.iter().collect()).collect();
    let size = domains
        .iter()
        .try_fold(1u128, |acc, d| acc.checked_mul(d.len() as u128))
        .unwrap_or(u128::MAX);
    if size > ORACLE_LIMIT {
        return Err(TooLarge(size));
    }
    let mut found = Vec::new();
    if size == 0 {
        return Ok(found);
    }
    let mut digits = vec![0usize; domains.len()];
    let mut slots: Vec<Slot> = domains.iter().map(|d| d[0]).collect();
    loop {
        if let Ok(score) = check_assignment(model, &slots) {
            found.push(OracleSolution {
                slots: slots.clone(),
                score,
            });
        }
        // Odometer increment, last variable fastest.
        let mut i = domains.len();
        loop {
            if i == 0 {
                return Ok(found);
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < domains[i].len() {
                slots[i] = domains[i][digits[i]];
                break;
            }
            digits[i] = 0;
            slots[i] = domains[i][0];
        }
    }
}
