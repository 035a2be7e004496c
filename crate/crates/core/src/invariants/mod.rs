//! Characteristic and Tutte polynomials, region counts, and the
//! specializations that recover h-polynomials.

mod tutte;

use std::collections::HashMap;

pub use tutte::{tutte, tutte_whitney, tutte_with, TutteCache};

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::poly::{BiPoly, UniPoly};
use crate::subset::Subset;

/// `chi(q) = sum_F mu(F) q^(crk F)`.
pub fn characteristic_polynomial(a: &Arrangement) -> Result<UniPoly> {
    a.require_central()?;
    let lattice = a.flats();
    Ok(lattice.flats().iter().enumerate().map(|(i, f)| UniPoly::monomial(lattice.mu(i), f.corank)).sum())
}

/// Number of chambers of the real arrangement, `(-1)^rk chi(-1)`.
pub fn num_regions(a: &Arrangement) -> Result<i64> {
    let chi = characteristic_polynomial(a)?;
    let sign = if a.dim().is_multiple_of(2) { 1 } else { -1 };
    let regions = sign * chi.eval(-1);
    let lattice = a.flats();
    let total: i64 = (0..lattice.len()).map(|i| lattice.mu(i).abs()).sum();
    if regions != total {
        return Err(Error::Invariant(format!("region count {regions} differs from sum of |mu| {total}")));
    }
    Ok(regions)
}

/// Specializations of the Tutte polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TutteSpecializations {
    /// `q^rk T(1/q, 1)`, the h-polynomial of the matroid complex.
    pub h: UniPoly,
    /// `q^rk T(1/q, 0)`, the h-polynomial of a broken-circuit complex.
    pub h_br: UniPoly,
    /// `T(0, 1)`, the top h-number of the matroid complex.
    pub h_top: i64,
}

pub fn h_from_tutte(a: &Arrangement) -> Result<TutteSpecializations> {
    require_loopless(a)?;
    Ok(specialize(&tutte(a), a.dim()))
}

pub(crate) fn specialize(t: &BiPoly, rank: usize) -> TutteSpecializations {
    TutteSpecializations { h: t.at_y(1).reversed(rank), h_br: t.at_y(0).reversed(rank), h_top: t.eval(0, 1) }
}

pub(crate) fn require_loopless(a: &Arrangement) -> Result<()> {
    match (0..a.n()).find(|&i| a.rank(Subset::singleton(i)) == 0) {
        Some(i) => Err(Error::LoopPresent(i)),
        None => Ok(()),
    }
}

/// `(-1)^rk sum_F mu(F) q^(rk F) (q - 1)^(crk F)`.
pub fn h_br_moebius(a: &Arrangement) -> Result<UniPoly> {
    a.require_central()?;
    let lattice = a.flats();
    let sum: UniPoly = lattice
        .flats()
        .iter()
        .enumerate()
        .map(|(i, f)| UniPoly::q_minus_one_pow(f.corank).shift(f.rank).scale(lattice.mu(i)))
        .sum();
    Ok(if a.dim().is_multiple_of(2) { sum } else { sum.scale(-1) })
}

/// `T_A(x, y) - sum_F T_{A^F}(x, 0) T_{A_F}(0, y)`; zero for every central
/// arrangement.
pub fn krs_residual(a: &Arrangement) -> Result<BiPoly> {
    krs_residual_with(a, &TutteCache::new())
}

pub fn krs_residual_with(a: &Arrangement, cache: &TutteCache) -> Result<BiPoly> {
    a.require_central()?;
    let lattice = a.flats();
    let mut sum = BiPoly::zero();
    for f in lattice.flats() {
        let restriction = a.restriction(f.members)?.arrangement;
        let localization = a.localization(f.members)?.arrangement;
        let left = tutte_with(&restriction, cache).at_y(0);
        let right = tutte_with(&localization, cache).at_x(0);
        sum = &sum + &BiPoly::outer(&left, &right);
    }
    Ok(&tutte_with(a, cache) - &sum)
}

/// Number of bases and of independent sets by direct enumeration; the Tutte
/// polynomial must give `T(1,1)` and `T(2,1)`.
pub fn count_bases_and_independent(a: &Arrangement) -> (i64, i64) {
    let mut by_rank: HashMap<bool, i64> = HashMap::new();
    let mut independent = 0;
    for s in a.ground().subsets() {
        if a.is_independent(s) {
            independent += 1;
            *by_rank.entry(s.len() == a.dim()).or_insert(0) += 1;
        }
    }
    (by_rank.get(&true).copied().unwrap_or(0), independent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn characteristic_polynomial_examples() {
        assert_eq!(characteristic_polynomial(&fixtures::b2()).unwrap(), UniPoly::new(&[1, -2, 1]));
        assert_eq!(characteristic_polynomial(&fixtures::k3()).unwrap(), UniPoly::new(&[2, -3, 1]));
        assert_eq!(characteristic_polynomial(&fixtures::nu4()).unwrap(), UniPoly::new(&[3, -4, 1]));
        let affine = fixtures::k3().with_offsets(vec![0, 0, 1]).unwrap();
        assert_eq!(characteristic_polynomial(&affine), Err(Error::NonCentral));
    }

    #[test]
    fn region_examples() {
        assert_eq!(num_regions(&fixtures::b2()).unwrap(), 4);
        assert_eq!(num_regions(&fixtures::k3()).unwrap(), 6);
        assert_eq!(num_regions(&fixtures::nu4()).unwrap(), 8);
        assert_eq!(num_regions(&fixtures::k4()).unwrap(), 24);
        assert_eq!(num_regions(&Arrangement::empty()).unwrap(), 1);
    }

    #[test]
    fn specialization_examples() {
        let k3 = h_from_tutte(&fixtures::k3()).unwrap();
        assert_eq!((k3.h, k3.h_br, k3.h_top), (UniPoly::new(&[1, 1, 1]), UniPoly::new(&[1, 1]), 1));
        let k4 = h_from_tutte(&fixtures::k4()).unwrap();
        assert_eq!((k4.h, k4.h_br, k4.h_top), (UniPoly::new(&[1, 3, 6, 6]), UniPoly::new(&[1, 3, 2]), 6));
        let b2 = h_from_tutte(&fixtures::b2()).unwrap();
        assert_eq!((b2.h, b2.h_br, b2.h_top), (UniPoly::one(), UniPoly::one(), 0));
    }

    #[test]
    fn moebius_h_br_examples() {
        assert_eq!(h_br_moebius(&fixtures::k3()).unwrap(), UniPoly::new(&[1, 1]));
        assert_eq!(h_br_moebius(&fixtures::b2()).unwrap(), UniPoly::one());
        assert_eq!(h_br_moebius(&fixtures::rep4()).unwrap(), UniPoly::new(&[1, 1]));
        assert_eq!(h_br_moebius(&fixtures::k4()).unwrap(), UniPoly::new(&[1, 3, 2]));
    }

    #[test]
    fn krs_vanishes_on_fixtures() {
        for (name, a) in fixtures::catalog() {
            assert!(krs_residual(&a).unwrap().is_zero(), "{name}");
        }
    }

    #[test]
    fn tutte_evaluations_count_bases_and_independent_sets() {
        for (name, a) in fixtures::catalog() {
            let t = tutte(&a);
            let (bases, independent) = count_bases_and_independent(&a);
            assert_eq!(t.eval(1, 1), bases, "{name}");
            assert_eq!(t.eval(2, 1), independent, "{name}");
        }
    }
}
