//! Fixed-width slot sets.

use std::fmt;

use crate::grid::{Slot, MAX_SLOTS};

/// A set of slot indices below [`MAX_SLOTS`], stored as a 128-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct DomainSet(u128);

impl DomainSet {
    pub const EMPTY: DomainSet = DomainSet(0);

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: u32) -> Self {
        assert!(n <= MAX_SLOTS, "domain width {n} exceeds {MAX_SLOTS}");
        if n == MAX_SLOTS {
            DomainSet(u128::MAX)
        } else {
            DomainSet((1u128 << n) - 1)
        }
    }

    /// `{lo, ..., hi}`; empty when `lo > hi`.
    pub fn range(lo: Slot, hi: Slot) -> Self {
        if lo > hi || lo >= MAX_SLOTS {
            return Self::EMPTY;
        }
        let hi = hi.min(MAX_SLOTS - 1);
        DomainSet(Self::full(hi + 1).0 & !Self::full(lo).0)
    }

    pub fn singleton(v: Slot) -> Self {
        assert!(v < MAX_SLOTS);
        DomainSet(1u128 << v)
    }

    pub fn from_bits(bits: u128) -> Self {
        DomainSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_singleton(self) -> bool {
        self.0 != 0 && self.0 & (self.0 - 1) == 0
    }

    pub fn contains(self, v: Slot) -> bool {
        v < MAX_SLOTS && self.0 >> v & 1 == 1
    }

    pub fn min(self) -> Option<Slot> {
        (self.0 != 0).then(|| self.0.trailing_zeros())
    }

    pub fn max(self) -> Option<Slot> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros())
    }

    /// The value of a singleton set.
    pub fn value(self) -> Option<Slot> {
        if self.is_singleton() {
            self.min()
        } else {
            None
        }
    }

    pub fn insert(&mut self, v: Slot) {
        self.0 |= Self::singleton(v).0;
    }

    /// Removes `v`; returns whether it was present.
    pub fn remove(&mut self, v: Slot) -> bool {
        let had = self.contains(v);
        if v < MAX_SLOTS {
            self.0 &= !(1u128 << v);
        }
        had
    }

    pub fn union(self, other: Self) -> Self {
        DomainSet(self.0 | other.0)
    }

    pub fn intersect(self, other: Self) -> Self {
        DomainSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        DomainSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Whether the set is an unbroken run `min..=max`.
    pub fn is_contiguous(self) -> bool {
        match (self.min(), self.max()) {
            (Some(lo), Some(hi)) => self.len() == hi - lo + 1,
            _ => true,
        }
    }

    pub fn iter(self) -> impl Iterator<Item = Slot> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros();
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<Slot> for DomainSet {
    fn from_iter<I: IntoIterator<Item = Slot>>(iter: I) -> Self {
        let mut d = DomainSet::EMPTY;
        for v in iter {
            d.insert(v);
        }
        d
    }
}

impl fmt::Debug for DomainSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
