//! Simplicial complexes on a ground set of at most 20 vertices: the matroid
//! complex of independent sets, broken-circuit complexes, and their f- and
//! h-vectors.

use serde::Serialize;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::subset::Subset;

/// A downward-closed family of subsets, stored by its facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: usize,
    facets: Vec<Subset>,
    max_face: usize,
}

impl SimplicialComplex {
    /// Builds the complex whose faces are exactly the sets accepted by
    /// `is_face`, which must be downward closed and accept the empty set.
    pub fn from_oracle(ground: usize, is_face: impl Fn(Subset) -> bool) -> Self {
        assert!(is_face(Subset::EMPTY), "the empty set is always a face");
        let mut facets = Vec::new();
        let mut stack = vec![Subset::EMPTY];
        while let Some(face) = stack.pop() {
            let mut maximal = true;
            for j in 0..ground {
                if face.contains(j) || !is_face(face.with(j)) {
                    continue;
                }
                maximal = false;
                // Grow faces in increasing order so each is visited once.
                if face.iter().all(|i| i < j) {
                    stack.push(face.with(j));
                }
            }
            if maximal {
                facets.push(face);
            }
        }
        Self::from_facets(ground, facets)
    }

    /// The complex generated by `facets`; non-maximal entries are dropped.
    pub fn from_facets(ground: usize, facets: impl IntoIterator<Item = Subset>) -> Self {
        let mut all: Vec<Subset> = facets.into_iter().collect();
        all.sort_by_key(|f| (std::cmp::Reverse(f.len()), f.bits()));
        all.dedup();
        let mut facets: Vec<Subset> = Vec::new();
        for f in all {
            if !facets.iter().any(|g| f.is_subset_of(*g)) {
                facets.push(f);
            }
        }
        if facets.is_empty() {
            facets.push(Subset::EMPTY);
        }
        facets.sort_by_key(|f| f.bits());
        let max_face = facets.iter().map(|f| f.len()).max().unwrap_or(0);
        SimplicialComplex { ground, facets, max_face }
    }

    /// All subsets of `{0..n-1}`.
    pub fn simplex(ground: usize) -> Self {
        Self::from_facets(ground, [Subset::full(ground)])
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn facets(&self) -> &[Subset] {
        &self.facets
    }

    /// Largest face cardinality minus one; `-1` for the complex `{∅}`.
    pub fn dim(&self) -> isize {
        self.max_face as isize - 1
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.facets.iter().any(|f| s.is_subset_of(*f))
    }

    /// Every face, in depth-first order.
    pub fn faces(&self) -> Vec<Subset> {
        let mut out = Vec::new();
        self.visit_faces(|s| out.push(s));
        out
    }

    fn visit_faces(&self, mut visit: impl FnMut(Subset)) {
        let mut stack = vec![Subset::EMPTY];
        while let Some(face) = stack.pop() {
            visit(face);
            let start = face.iter().last().map_or(0, |m| m + 1);
            for j in start..self.ground {
                let next = face.with(j);
                if self.contains(next) {
                    stack.push(next);
                }
            }
        }
    }

    /// `f[i]` counts faces with `i` elements.
    pub fn f_vector(&self) -> Vec<i64> {
        let mut f = vec![0; self.max_face + 1];
        self.visit_faces(|s| f[s.len()] += 1);
        f
    }

    /// Minimal subsets that are not faces.
    pub fn minimal_nonfaces(&self) -> Vec<Subset> {
        let mut out = Vec::new();
        // A minimal non-face minus its largest element is a face.
        self.visit_faces(|face| {
            let start = face.iter().last().map_or(0, |m| m + 1);
            for j in start..self.ground {
                let s = face.with(j);
                if !self.contains(s) && s.iter().all(|i| self.contains(s.without(i))) {
                    out.push(s);
                }
            }
        });
        out.sort_by_key(|s| (s.len(), s.bits()));
        out
    }
}

/// Independent subsets of the normals.
pub fn matroid_complex(a: &Arrangement) -> SimplicialComplex {
    SimplicialComplex::from_oracle(a.n(), |s| a.is_independent(s))
}

/// Subsets containing no broken circuit, where `order` lists the ground set
/// from smallest to largest and a broken circuit is a circuit minus its
/// smallest element.
pub fn broken_circuit_complex(a: &Arrangement, order: &[usize]) -> Result<SimplicialComplex> {
    if let Some(i) = (0..a.n()).find(|&i| a.rank(Subset::singleton(i)) == 0) {
        return Err(Error::LoopPresent(i));
    }
    check_order(order, a.n())?;
    let broken: Vec<Subset> = a
        .circuits()
        .iter()
        .map(|c| {
            let first = order.iter().copied().find(|&i| c.members.contains(i)).unwrap();
            c.members.without(first)
        })
        .collect();
    Ok(SimplicialComplex::from_oracle(a.n(), |s| broken.iter().all(|b| !b.is_subset_of(s))))
}

pub(crate) fn check_order(order: &[usize], n: usize) -> Result<()> {
    let seen: Subset = order.iter().copied().filter(|&i| i < n).collect();
    if order.len() != n || seen != Subset::full(n) {
        return Err(Error::Parse(format!("{order:?} is not a permutation of {n} elements")));
    }
    Ok(())
}

/// f-vector, h-vector and h-polynomial with respect to a grading `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HVector {
    pub f: Vec<i64>,
    pub h: Vec<i64>,
    #[serde(skip)]
    pub poly: UniPoly,
}

/// `h(q) = sum_i f_i q^i (1 - q)^(d - i)`.
pub fn f_h(complex: &SimplicialComplex, d: usize) -> Result<HVector> {
    if complex.max_face > d {
        return Err(Error::Invariant(format!("complex of dimension {} graded in degree {d}", complex.dim())));
    }
    let mut f = complex.f_vector();
    f.resize(d + 1, 0);
    let one_minus_q = UniPoly::new(&[1, -1]);
    let poly: UniPoly = f.iter().enumerate().map(|(i, &fi)| one_minus_q.pow(d - i).shift(i).scale(fi)).sum();
    let h = (0..=d).map(|i| poly.coeff(i)).collect();
    Ok(HVector { f, h, poly })
}

/// Inverse of [`f_h`]: `f_i = sum_{j <= i} C(d - j, i - j) h_j`.
pub fn f_from_h(h: &[i64], d: usize) -> Vec<i64> {
    (0..=d).map(|i| (0..=i).map(|j| binomial(d - j, i - j) * h.get(j).copied().unwrap_or(0)).sum()).collect()
}

pub(crate) fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::subset::subsets_of_size;

    fn s(labels: &[usize]) -> Subset {
        Subset::from_labels(labels).unwrap()
    }

    fn id(n: usize) -> Vec<usize> {
        (0..n).collect()
    }

    #[test]
    fn matroid_complex_examples() {
        assert_eq!(matroid_complex(&fixtures::b2()), SimplicialComplex::simplex(2));
        let k3 = matroid_complex(&fixtures::k3());
        assert_eq!(k3.facets(), &[s(&[1, 2]), s(&[1, 3]), s(&[2, 3])]);
        let rep4 = matroid_complex(&fixtures::rep4());
        let expected: Vec<Subset> = subsets_of_size(4, 2).filter(|&t| t != s(&[2, 3])).collect();
        assert_eq!(rep4.facets().len(), expected.len());
        assert!(expected.iter().all(|&t| rep4.contains(t)));
        assert!(!rep4.contains(s(&[2, 3])));
        assert_eq!(rep4.dim(), 1);
    }

    #[test]
    fn broken_circuit_examples() {
        let k3 = broken_circuit_complex(&fixtures::k3(), &id(3)).unwrap();
        let mut faces = k3.faces();
        faces.sort_by_key(|f| (f.len(), f.bits()));
        assert_eq!(faces, vec![Subset::EMPTY, s(&[1]), s(&[2]), s(&[3]), s(&[1, 2]), s(&[1, 3])]);

        assert_eq!(broken_circuit_complex(&fixtures::b2(), &[1, 0]).unwrap(), SimplicialComplex::simplex(2));

        let rep4 = broken_circuit_complex(&fixtures::rep4(), &id(4)).unwrap();
        let mut faces = rep4.faces();
        faces.sort_by_key(|f| (f.len(), f.bits()));
        assert_eq!(faces, vec![Subset::EMPTY, s(&[1]), s(&[2]), s(&[4]), s(&[1, 2]), s(&[1, 4])]);
    }

    #[test]
    fn broken_circuit_rejects_bad_orders() {
        assert!(broken_circuit_complex(&fixtures::k3(), &[0, 0, 1]).is_err());
        assert!(broken_circuit_complex(&fixtures::k3(), &[0, 1]).is_err());
    }

    #[test]
    fn h_vector_examples() {
        let k3 = f_h(&matroid_complex(&fixtures::k3()), 2).unwrap();
        assert_eq!(k3.f, vec![1, 3, 3]);
        assert_eq!(k3.poly, UniPoly::new(&[1, 1, 1]));
        assert_eq!(f_h(&matroid_complex(&fixtures::b2()), 2).unwrap().poly, UniPoly::one());
        let rep4 = f_h(&broken_circuit_complex(&fixtures::rep4(), &id(4)).unwrap(), 2).unwrap();
        assert_eq!(rep4.f, vec![1, 3, 2]);
        assert_eq!(rep4.h, vec![1, 1, 0]);
        assert_eq!(rep4.poly, UniPoly::new(&[1, 1]));
    }

    #[test]
    fn grading_below_dimension_is_rejected() {
        assert!(f_h(&SimplicialComplex::simplex(3), 2).is_err());
    }

    #[test]
    fn f_from_h_round_trip() {
        for (_, a) in fixtures::catalog() {
            let hv = f_h(&matroid_complex(&a), a.dim()).unwrap();
            assert_eq!(f_from_h(&hv.h, a.dim()), hv.f);
        }
    }

    #[test]
    fn minimal_nonfaces() {
        let k3 = matroid_complex(&fixtures::k3());
        assert_eq!(k3.minimal_nonfaces(), vec![s(&[1, 2, 3])]);
        let rep4 = broken_circuit_complex(&fixtures::rep4(), &id(4)).unwrap();
        assert_eq!(rep4.minimal_nonfaces(), vec![s(&[3]), s(&[2, 4])]);
        assert!(SimplicialComplex::simplex(3).minimal_nonfaces().is_empty());
    }
}
