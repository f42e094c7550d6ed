//! The weekly time grid: days × slots, indexed day-major.

use thiserror::Error;

/// Upper bound on `days × slots`; domains are stored as 128-bit sets.
pub const MAX_SLOTS: u32 = 128;

/// Slot index in `[0, total_slots)`.
pub type Slot = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("grid must have at least one day and one slot per day")]
    Empty,
    #[error("grid has {0} slots, at most {MAX_SLOTS} are supported")]
    TooLarge(u32),
    #[error("expected {expected} day names, got {got}")]
    DayNames { expected: u32, got: usize },
    #[error("slot {slot} is outside the grid (total {total})")]
    OutOfRange { slot: Slot, total: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimeGrid {
    days_per_week: u32,
    slots_per_day: u32,
    day_names: Vec<String>,
}

const WEEK: [&str; 7] = [
    "Saturday",
    "Sunday",
    "Monday",
    "Tuesday",
    "Wednesday",
    "Thursday",
    "Friday",
];

impl Default for TimeGrid {
    /// Six teaching days of five slots, starting on Saturday.
    fn default() -> Self {
        Self::with_default_names(6, 5).expect("6x5 grid is valid")
    }
}

impl TimeGrid {
    pub fn new(days_per_week: u32, slots_per_day: u32, day_names: Vec<String>) -> Result<Self, GridError> {
        if days_per_week == 0 || slots_per_day == 0 {
            return Err(GridError::Empty);
        }
        let total = days_per_week.saturating_mul(slots_per_day);
        if total > MAX_SLOTS {
            return Err(GridError::TooLarge(total));
        }
        if day_names.len() != days_per_week as usize {
            return Err(GridError::DayNames {
                expected: days_per_week,
                got: day_names.len(),
            });
        }
        Ok(Self {
            days_per_week,
            slots_per_day,
            day_names,
        })
    }

    /// Day names cycle through the week starting at Saturday; grids longer
    /// than a week get numbered names.
    pub fn with_default_names(days_per_week: u32, slots_per_day: u32) -> Result<Self, GridError> {
        let names = (0..days_per_week as usize)
            .map(|d| {
                if d < WEEK.len() {
                    WEEK[d].to_string()
                } else {
                    format!("Day {}", d + 1)
                }
            })
            .collect();
        Self::new(days_per_week, slots_per_day, names)
    }

    pub fn days_per_week(&self) -> u32 {
        self.days_per_week
    }

    pub fn slots_per_day(&self) -> u32 {
        self.slots_per_day
    }

    pub fn day_names(&self) -> &[String] {
        &self.day_names
    }

    pub fn total_slots(&self) -> u32 {
        self.days_per_week * self.slots_per_day
    }

    pub fn contains(&self, slot: Slot) -> bool {
        slot < self.total_slots()
    }

    pub fn check_slot(&self, slot: Slot) -> Result<(), GridError> {
        if self.contains(slot) {
            Ok(())
        } else {
            Err(GridError::OutOfRange {
                slot,
                total: self.total_slots(),
            })
        }
    }

    /// Zero-based `(day, slot-in-day)` for a slot index.
    pub fn position(&self, slot: Slot) -> Result<(u32, u32), GridError> {
        self.check_slot(slot)?;
        Ok((slot / self.slots_per_day, slot % self.slots_per_day))
    }

    /// Inverse of [`TimeGrid::position`].
    pub fn slot_at(&self, day: u32, slot_in_day: u32) -> Result<Slot, GridError> {
        let slot = day * self.slots_per_day + slot_in_day;
        if day >= self.days_per_week || slot_in_day >= self.slots_per_day {
            return Err(GridError::OutOfRange {
                slot,
                total: self.total_slots(),
            });
        }
        Ok(slot)
    }

    /// First and last slot index of `day`, inclusive.
    pub fn day_bounds(&self, day: u32) -> (Slot, Slot) {
        let first = day * self.slots_per_day;
        (first, first + self.slots_per_day - 1)
    }
}

/// Human-readable location of a slot: the day's name and a 1-based ordinal
/// within the day.
pub fn decode_slot(grid: &TimeGrid, slot: Slot) -> Result<(&str, u32), GridError> {
    let (day, in_day) = grid.position(slot)?;
    Ok((grid.day_names[day as usize].as_str(), in_day + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid_is_saturday_first() {
        let g = TimeGrid::default();
        assert_eq!(g.total_slots(), 30);
        assert_eq!(g.day_names()[0], "Saturday");
        assert_eq!(g.day_names()[5], "Thursday");
    }

    #[test]
    fn decode_anchors() {
        let g = TimeGrid::default();
        assert_eq!(decode_slot(&g, 0).unwrap(), ("Saturday", 1));
        assert_eq!(decode_slot(&g, 22).unwrap(), ("Wednesday", 3));
        assert_eq!(decode_slot(&g, 29).unwrap(), ("Thursday", 5));
        assert!(matches!(decode_slot(&g, 30), Err(GridError::OutOfRange { .. })));
    }

    #[test]
    fn decode_is_bijective() {
        let g = TimeGrid::with_default_names(4, 7).unwrap();
        let mut seen = std::collections::HashSet::new();
        for s in 0..g.total_slots() {
            let (name, ord) = decode_slot(&g, s).unwrap();
            assert!(seen.insert((name.to_string(), ord)));
            let day = g.day_names().iter().position(|d| d == name).unwrap() as u32;
            assert_eq!(g.slot_at(day, ord - 1).unwrap(), s);
        }
        assert_eq!(seen.len(), 28);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert_eq!(TimeGrid::with_default_names(0, 5), Err(GridError::Empty));
        assert_eq!(TimeGrid::with_default_names(13, 10), Err(GridError::TooLarge(130)));
        assert!(matches!(
            TimeGrid::new(2, 2, vec!["A".into()]),
            Err(GridError::DayNames { expected: 2, got: 1 })
        ));
    }
}
