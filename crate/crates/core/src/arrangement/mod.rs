//! Integer hyperplane arrangements and their matroid structure.
//!
//! An arrangement is a list of nonzero integer normals `a_i` in `Z^d`
//! together with integer offsets `r_i`; hyperplane `i` is
//! `{v : v . a_i + r_i = 0}`. Repeated and non-primitive normals are allowed.
//! All structural queries depend only on the normals, except simplicity,
//! which also reads the offsets.

mod classify;
mod flats;
mod minors;

use serde::{Deserialize, Serialize};

pub use classify::Classification;
pub use flats::{Flat, FlatLattice};
pub use minors::Minor;

use crate::error::{Error, Result};
use crate::lattice;
use crate::subset::{subsets_of_size, Subset, MAX_GROUND};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ArrangementJson", into = "ArrangementJson")]
pub struct Arrangement {
    dim: usize,
    columns: Vec<Vec<i64>>,
    offsets: Vec<i64>,
    labels: Option<Vec<String>>,
}

/// Wire format shared by every module and the CLI.
#[derive(Serialize, Deserialize)]
struct ArrangementJson {
    d: usize,
    n: usize,
    columns: Vec<Vec<i64>>,
    #[serde(default)]
    offsets: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl TryFrom<ArrangementJson> for Arrangement {
    type Error = Error;

    fn try_from(j: ArrangementJson) -> Result<Self> {
        if j.columns.len() != j.n {
            return Err(Error::InvalidArrangement(format!("n = {} but {} columns given", j.n, j.columns.len())));
        }
        let offsets = j.offsets.unwrap_or_else(|| vec![0; j.n]);
        let mut a = Arrangement::new(j.d, j.columns, offsets)?;
        if let Some(labels) = j.labels {
            a = a.with_labels(labels)?;
        }
        Ok(a)
    }
}

impl From<Arrangement> for ArrangementJson {
    fn from(a: Arrangement) -> Self {
        ArrangementJson { d: a.dim, n: a.columns.len(), columns: a.columns, offsets: Some(a.offsets), labels: a.labels }
    }
}

/// A minimal dependent set with its primitive dependency.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Circuit {
    pub members: Subset,
    /// `sum_i signs[i] * a_i = 0`; zero off `members`, primitive, and positive
    /// at the minimal member.
    pub signs: Vec<i64>,
}

impl Circuit {
    /// Rescale by -1 if needed so that the entry at the first element of
    /// `order` lying in the circuit is positive.
    pub fn oriented_by(&self, order: &[usize]) -> Circuit {
        let first = order.iter().copied().find(|&i| self.members.contains(i)).expect("order covers the circuit");
        let mut c = self.clone();
        if c.signs[first] < 0 {
            c.signs.iter_mut().for_each(|x| *x = -*x);
        }
        c
    }
}

impl Arrangement {
    /// Validated constructor. Columns must be nonzero, of length `dim`, and
    /// span a rank-`dim` space; at most [`MAX_GROUND`] of them.
    pub fn new(dim: usize, columns: Vec<Vec<i64>>, offsets: Vec<i64>) -> Result<Self> {
        let n = columns.len();
        if n > MAX_GROUND {
            return Err(Error::InvalidArrangement(format!("{n} hyperplanes exceeds the cap of {MAX_GROUND}")));
        }
        if offsets.len() != n {
            return Err(Error::InvalidArrangement(format!("{} offsets for {n} hyperplanes", offsets.len())));
        }
        for (i, c) in columns.iter().enumerate() {
            if c.len() != dim {
                return Err(Error::InvalidArrangement(format!(
                    "column {} has length {}, expected {dim}",
                    i + 1,
                    c.len()
                )));
            }
            if c.iter().all(|&x| x == 0) {
                return Err(Error::InvalidArrangement(format!("column {} is zero", i + 1)));
            }
        }
        let r = lattice::rank(&columns);
        if r != dim {
            return Err(Error::InvalidArrangement(format!("columns have rank {r}, expected {dim}")));
        }
        Ok(Arrangement { dim, columns, offsets, labels: None })
    }

    pub fn central(dim: usize, columns: Vec<Vec<i64>>) -> Result<Self> {
        let n = columns.len();
        Self::new(dim, columns, vec![0; n])
    }

    /// The rank-0 arrangement with no hyperplanes.
    pub fn empty() -> Self {
        Arrangement { dim: 0, columns: Vec::new(), offsets: Vec::new(), labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::InvalidArrangement(format!("{} labels for {} hyperplanes", labels.len(), self.n())));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn with_offsets(&self, offsets: Vec<i64>) -> Result<Self> {
        let mut a = Self::new(self.dim, self.columns.clone(), offsets)?;
        a.labels = self.labels.clone();
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    /// `n - d`, the rank of the kernel torus.
    pub fn k(&self) -> usize {
        self.n() - self.dim
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    pub fn column(&self, i: usize) -> &[i64] {
        &self.columns[i]
    }

    pub fn offsets(&self) -> &[i64] {
        &self.offsets
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.n())
    }

    pub fn is_central(&self) -> bool {
        self.offsets.iter().all(|&r| r == 0)
    }

    pub(crate) fn require_central(&self) -> Result<()> {
        if self.is_central() {
            Ok(())
        } else {
            Err(Error::NonCentral)
        }
    }

    /// The `d x n` matrix whose columns are the normals.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        (0..self.dim).map(|j| self.columns.iter().map(|c| c[j]).collect()).collect()
    }

    pub(crate) fn columns_of(&self, s: Subset) -> Vec<Vec<i64>> {
        s.iter().map(|i| self.columns[i].clone()).collect()
    }

    /// Rational rank of `{a_i : i in s}`.
    pub fn rank(&self, s: Subset) -> usize {
        if s.is_empty() {
            return 0;
        }
        lattice::rank(&self.columns_of(s))
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.rank(s) == s.len()
    }

    /// Smallest flat containing `s`.
    pub fn closure(&self, s: Subset) -> Flat {
        let r = self.rank(s);
        let members = (0..self.n()).filter(|&i| s.contains(i) || self.rank(s.with(i)) == r).collect();
        Flat { members, rank: r, corank: self.dim - r }
    }

    pub fn is_flat(&self, s: Subset) -> bool {
        self.closure(s).members == s
    }

    pub(crate) fn require_flat(&self, s: Subset) -> Result<Flat> {
        let f = self.closure(s);
        if f.members == s {
            Ok(f)
        } else {
            Err(Error::NotAFlat(s))
        }
    }

    /// The lattice of flats with its Möbius function.
    pub fn flats(&self) -> FlatLattice {
        FlatLattice::of(self)
    }

    /// Every circuit once, with sign vectors normalized positive at the
    /// smallest member.
    pub fn circuits(&self) -> Vec<Circuit> {
        let n = self.n();
        let mut out = Vec::new();
        for size in 1..=(self.dim + 1).min(n) {
            for s in subsets_of_size(n, size) {
                if self.rank(s) != size - 1 || s.iter().any(|i| !self.is_independent(s.without(i))) {
                    continue;
                }
                out.push(self.circuit_on(s));
            }
        }
        out
    }

    fn circuit_on(&self, members: Subset) -> Circuit {
        let cols = self.columns_of(members);
        let rows: Vec<Vec<i64>> = (0..self.dim).map(|j| cols.iter().map(|c| c[j]).collect()).collect();
        let kernel = lattice::integer_kernel(&rows, cols.len());
        debug_assert_eq!(kernel.len(), 1, "a circuit has a one-dimensional dependency space");
        let mut signs = vec![0; self.n()];
        for (i, &x) in members.iter().zip(&kernel[0]) {
            signs[i] = x;
        }
        let first = members.min().unwrap();
        if signs[first] < 0 {
            signs.iter_mut().for_each(|x| *x = -*x);
        }
        Circuit { members, signs }
    }

    /// Elements `i` of `f` whose removal drops the rank of `f`.
    pub fn coloops(&self, f: Subset) -> Subset {
        let r = self.rank(f);
        f.iter().filter(|&i| self.rank(f.without(i)) < r).collect()
    }

    pub fn is_coloop_free(&self) -> bool {
        self.coloops(self.ground()).is_empty()
    }

    /// Rows form a lattice basis (Hermite normal form) of the integer kernel
    /// of the normal matrix `Z^n -> Z^d`; a `k x n` matrix.
    pub fn kernel_basis(&self) -> Vec<Vec<i64>> {
        lattice::integer_kernel(&self.matrix(), self.n())
    }
}
