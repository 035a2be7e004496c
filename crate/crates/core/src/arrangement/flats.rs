use std::collections::{HashMap, HashSet};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::Arrangement;
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Flat {
    pub members: Subset,
    pub rank: usize,
    pub corank: usize,
}

/// All flats ordered by cardinality, with the Möbius function on every
/// interval.
#[derive(Clone, Debug)]
pub struct FlatLattice {
    flats: Vec<Flat>,
    index: HashMap<Subset, usize>,
    // moebius[i][j] = mu(F_i, F_j); zero unless F_i is contained in F_j.
    moebius: Vec<Vec<i64>>,
}

impl FlatLattice {
    pub(super) fn of(a: &Arrangement) -> Self {
        let bottom = a.closure(Subset::EMPTY);
        let mut seen: HashSet<Subset> = HashSet::from([bottom.members]);
        let mut flats = vec![bottom];
        let mut frontier = vec![bottom];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for f in &frontier {
                for i in a.ground().difference(f.members).iter() {
                    let g = a.closure(f.members.with(i));
                    if seen.insert(g.members) {
                        next.push(g);
                    }
                }
            }
            flats.extend_from_slice(&next);
            frontier = next;
        }
        flats.sort_by_key(|f| (f.members.len(), f.members.bits()));
        let index = flats.iter().enumerate().map(|(i, f)| (f.members, i)).collect();

        // Containment only goes forward in this order, so each row of mu
        // is filled left to right.
        let m = flats.len();
        let mut moebius = vec![vec![0i64; m]; m];
        for i in 0..m {
            moebius[i][i] = 1;
            for j in i + 1..m {
                if !flats[i].members.is_subset_of(flats[j].members) {
                    continue;
                }
                let s: i64 =
                    (i..j).filter(|&h| flats[h].members.is_subset_of(flats[j].members)).map(|h| moebius[i][h]).sum();
                moebius[i][j] = -s;
            }
        }
        FlatLattice { flats, index, moebius }
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn get(&self, i: usize) -> &Flat {
        &self.flats[i]
    }

    pub fn index_of(&self, members: Subset) -> Option<usize> {
        self.index.get(&members).copied()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.flats.len() - 1
    }

    /// Whether `F_i` is contained in `F_j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.flats[i].members.is_subset_of(self.flats[j].members)
    }

    pub fn moebius(&self, i: usize, j: usize) -> i64 {
        self.moebius[i][j]
    }

    /// `mu(bottom, F_i)`.
    pub fn mu(&self, i: usize) -> i64 {
        self.moebius[0][i]
    }

    /// Indices of flats containing `F_i`.
    pub fn above(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (i..self.len()).filter(move |&j| self.leq(i, j))
    }
}

impl Serialize for FlatLattice {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            members: Subset,
            rank: usize,
            corank: usize,
            mu: i64,
        }
        let entries: Vec<Entry> = self
            .flats
            .iter()
            .enumerate()
            .map(|(i, f)| Entry { members: f.members, rank: f.rank, corank: f.corank, mu: self.mu(i) })
            .collect();
        let mut st = s.serialize_struct("FlatLattice", 2)?;
        st.serialize_field("count", &entries.len())?;
        st.serialize_field("flats", &entries)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn members(a: &Arrangement) -> Vec<Vec<usize>> {
        a.flats().flats().iter().map(|f| f.members.to_labels()).collect()
    }

    #[test]
    fn flat_examples() {
        assert_eq!(members(&fixtures::b2()), vec![vec![], vec![1], vec![2], vec![1, 2]]);
        assert_eq!(members(&fixtures::k3()), vec![vec![], vec![1], vec![2], vec![3], vec![1, 2, 3]]);
        assert_eq!(members(&fixtures::rep4()), vec![vec![], vec![1], vec![4], vec![2, 3], vec![1, 2, 3, 4]]);
    }

    #[test]
    fn moebius_values() {
        let l = fixtures::k3().flats();
        assert_eq!((0..l.len()).map(|i| l.mu(i)).collect::<Vec<_>>(), vec![1, -1, -1, -1, 2]);
        let l = fixtures::nu4().flats();
        assert_eq!(l.mu(l.top()), 3);
    }

    #[test]
    fn moebius_satisfies_dual_recursion() {
        for (_, a) in fixtures::catalog() {
            let l = a.flats();
            for f in 0..l.len() {
                for g in l.above(f) {
                    let s: i64 = (f..=g).filter(|&h| l.leq(f, h) && l.leq(h, g)).map(|h| l.moebius(h, g)).sum();
                    assert_eq!(s, i64::from(f == g));
                }
            }
        }
    }

    #[test]
    fn flats_closed_under_intersection() {
        for (_, a) in fixtures::catalog() {
            let l = a.flats();
            for f in l.flats() {
                assert!(a.is_flat(f.members));
                assert_eq!(f.rank + f.corank, a.dim());
                for g in l.flats() {
                    let meet = a.closure(f.members.intersection(g.members));
                    assert!(l.index_of(meet.members).is_some());
                }
            }
            assert_eq!(l.get(l.bottom()).members, Subset::EMPTY);
            assert_eq!(l.get(l.top()).members, a.ground());
        }
    }
}
