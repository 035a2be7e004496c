//! Restriction `A^F` and localization `A_F` at a flat, as relabeled
//! arrangements that remember where each hyperplane came from.

use super::Arrangement;
use crate::error::{Error, Result};
use crate::lattice;
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minor {
    pub arrangement: Arrangement,
    /// `labels[j]` is the index in the parent of hyperplane `j`.
    pub labels: Vec<usize>,
}

impl Minor {
    /// Parent subset corresponding to a subset of the minor's ground set.
    pub fn lift(&self, s: Subset) -> Subset {
        s.iter().map(|j| self.labels[j]).collect()
    }

    /// Minor subset corresponding to the part of a parent subset it sees.
    pub fn pull(&self, s: Subset) -> Subset {
        self.labels.iter().enumerate().filter(|(_, &i)| s.contains(i)).map(|(j, _)| j).collect()
    }
}

impl Arrangement {
    /// Images of `{a_i : i not in F}` in `Z^d / sat(span a_F)`, written in a
    /// lattice basis of the quotient. Rank `crk F`.
    pub fn restriction(&self, f: Subset) -> Result<Minor> {
        self.require_central()?;
        self.require_flat(f)?;
        // Rows annihilate a_F and form a primitive system, so x -> P x is a
        // surjection Z^d -> Z^{crk F} with kernel exactly sat(span a_F).
        let p = lattice::integer_kernel(&self.columns_of(f), self.dim);
        let labels: Vec<usize> = self.ground().difference(f).iter().collect();
        let columns = labels.iter().map(|&i| lattice::mat_vec(&p, &self.columns[i])).collect();
        let arrangement = Arrangement::central(p.len(), columns)?;
        Ok(Minor { arrangement, labels })
    }

    /// `{a_i : i in F}` rewritten in the Hermite basis of their saturated
    /// span. Rank `rk F`.
    pub fn localization(&self, f: Subset) -> Result<Minor> {
        self.require_flat(f)?;
        let annihilator = lattice::integer_kernel(&self.columns_of(f), self.dim);
        let span = lattice::integer_kernel(&annihilator, self.dim);
        let labels: Vec<usize> = f.iter().collect();
        let columns = labels
            .iter()
            .map(|&i| {
                lattice::coordinates_in(&span, &self.columns[i])
                    .ok_or_else(|| Error::Invariant(format!("a_{} outside its saturated span", i + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        let offsets = labels.iter().map(|&i| self.offsets[i]).collect();
        let arrangement = Arrangement::new(span.len(), columns, offsets)?;
        Ok(Minor { arrangement, labels })
    }
}
