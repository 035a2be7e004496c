//! Subsets of a ground set `{0, .., n-1}` packed into a `u32`.
//!
//! Every subset-exponential routine in the crate relies on `n <= MAX_GROUND`.
//! Elements are 0-based internally and printed 1-based.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest supported ground set.
pub const MAX_GROUND: usize = 20;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_GROUND);
        if n == 0 {
            Subset(0)
        } else {
            Subset(u32::MAX >> (32 - n))
        }
    }

    pub fn singleton(i: usize) -> Self {
        Subset(1 << i)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        Subset(self.0 & !(1 << i))
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest element, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> SubsetsOf {
        SubsetsOf { mask: self.0, next: Some(0) }
    }

    /// 1-based element list, the external representation.
    pub fn to_labels(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    pub fn from_labels(labels: &[usize]) -> Option<Self> {
        labels.iter().try_fold(Subset::EMPTY, |acc, &l| (1..=MAX_GROUND).contains(&l).then(|| acc.with(l - 1)))
    }
}

/// All `k`-element subsets of `{0, .., n-1}` in increasing numeric order.
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = Subset> {
    let limit = 1u64 << n;
    let mut next = if k > n { None } else { Some((1u64 << k) - 1) };
    std::iter::from_fn(move || {
        let cur = next?;
        if cur >= limit {
            return None;
        }
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack.
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(Subset(cur as u32))
    })
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(Subset::EMPTY, Subset::with)
    }
}

pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(i as usize)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// Enumerates submasks in increasing numeric order.
pub struct SubsetsOf {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for SubsetsOf {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.mask { None } else { Some((cur | !self.mask).wrapping_add(1) & self.mask) };
        Some(Subset(cur))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_labels().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subset {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let labels = Vec::<usize>::deserialize(d)?;
        Subset::from_labels(&labels).ok_or_else(|| serde::de::Error::custom("subset label out of range"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submask_enumeration_covers_everything_once() {
        let s = Subset::from_bits(0b10110);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset_of(s)));
        let mut bits: Vec<_> = subs.iter().map(|t| t.bits()).collect();
        bits.dedup();
        assert_eq!(bits.len(), 8);
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn labels_are_one_based() {
        let s: Subset = [0, 2].into_iter().collect();
        assert_eq!(s.to_labels(), vec![1, 3]);
        assert_eq!(s.to_string(), "{1,3}");
        assert_eq!(Subset::from_labels(&[1, 3]), Some(s));
        assert_eq!(Subset::from_labels(&[0]), None);
    }

    #[test]
    fn fixed_size_enumeration_is_binomial() {
        assert_eq!(subsets_of_size(6, 3).count(), 20);
        assert_eq!(subsets_of_size(4, 0).collect::<Vec<_>>(), vec![Subset::EMPTY]);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
        assert!(subsets_of_size(5, 2).all(|s| s.len() == 2));
    }

    #[test]
    fn full_set_edges() {
        assert_eq!(Subset::full(0), Subset::EMPTY);
        assert_eq!(Subset::full(20).len(), 20);
        assert_eq!(Subset::full(3).bits(), 0b111);
    }
}
