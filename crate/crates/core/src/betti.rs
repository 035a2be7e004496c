//! Poincaré polynomials of hypertoric varieties and the recursions relating
//! them across the strata indexed by flats.
//!
//! For a central arrangement of rank `d`, the smooth variety attached to a
//! generic simplification has Poincaré polynomial `h_A(q)` (in `q = t^2`),
//! and the singular variety has intersection cohomology Poincaré polynomial
//! `h^br_A(q)`. Residuals are returned as polynomials and vanish exactly.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::arrangement::{Arrangement, Flat};
use crate::complexes::{broken_circuit_complex, f_h, matroid_complex};
use crate::error::{Error, Result};
use crate::invariants::{self, characteristic_polynomial, num_regions, require_loopless};
use crate::poly::UniPoly;

fn require_central_loopless(a: &Arrangement) -> Result<()> {
    a.require_central()?;
    require_loopless(a)
}

/// `h_A(q)`, the h-polynomial of the matroid complex graded by `rk A`.
pub fn poincare_smooth(a: &Arrangement) -> Result<UniPoly> {
    require_central_loopless(a)?;
    Ok(f_h(&matroid_complex(a), a.dim())?.poly)
}

/// `h^br_A(q)`, computed from the broken-circuit complex and checked against
/// the Möbius formula.
pub fn poincare_ih(a: &Arrangement) -> Result<UniPoly> {
    require_central_loopless(a)?;
    let order: Vec<usize> = (0..a.n()).collect();
    let from_complex = f_h(&broken_circuit_complex(a, &order)?, a.dim())?.poly;
    let from_moebius = invariants::h_br_moebius(a)?;
    if from_complex != from_moebius {
        return Err(Error::Invariant(format!(
            "broken-circuit h {from_complex} differs from Möbius sum {from_moebius}"
        )));
    }
    Ok(from_complex)
}

/// Local intersection cohomology at the stratum of `f`: `h^br` of the
/// localization `A_F`.
pub fn local_ih(a: &Arrangement, f: crate::Subset) -> Result<UniPoly> {
    a.require_central()?;
    let local = a.localization(f)?.arrangement;
    invariants::h_br_moebius(&local)
}

/// `q^(2d) P_A(1/q) - sum_F P_{A_F}(q) (q-1)^(crk F) sum_{G >= F} chi_{A^G}(q) r(A^F_G)`.
pub fn kl_residual(a: &Arrangement) -> Result<UniPoly> {
    require_central_loopless(a)?;
    let d = a.dim();
    let lattice = a.flats();
    let chi_restriction = lattice
        .flats()
        .iter()
        .map(|g| characteristic_polynomial(&a.restriction(g.members)?.arrangement))
        .collect::<Result<Vec<_>>>()?;

    let mut rhs = UniPoly::zero();
    for (i, f) in lattice.flats().iter().enumerate() {
        let local = invariants::h_br_moebius(&a.localization(f.members)?.arrangement)?;
        let restricted = a.restriction(f.members)?;
        let mut inner = UniPoly::zero();
        for j in lattice.above(i) {
            let g = lattice.get(j);
            // Flats of A above F are the flats of A^F, via the label map.
            let g_in_restriction = restricted.pull(g.members);
            let double = restricted.arrangement.localization(g_in_restriction)?.arrangement;
            inner += &chi_restriction[j].scale(num_regions(&double)?);
        }
        rhs += &(&(&local * &UniPoly::q_minus_one_pow(f.corank)) * &inner);
    }
    let lhs = poincare_ih(a)?.reversed(2 * d);
    Ok(&lhs - &rhs)
}

/// `h_A(q) - sum_F h^br_{A^F}(q) h_{rk F}(A_F) q^(rk F)`.
pub fn decomposition_residual(a: &Arrangement) -> Result<UniPoly> {
    require_central_loopless(a)?;
    let cache = invariants::TutteCache::new();
    let mut rhs = UniPoly::zero();
    for f in a.flats().flats() {
        let local = a.localization(f.members)?.arrangement;
        // h_{rk F}(A_F) = T_{A_F}(0, 1), zero unless F is coloop-free.
        let top = invariants::tutte_with(&local, &cache).eval(0, 1);
        if top == 0 {
            continue;
        }
        let restriction = a.restriction(f.members)?.arrangement;
        let h_br = invariants::h_br_moebius(&restriction)?;
        rhs += &h_br.shift(f.rank).scale(top);
    }
    Ok(&poincare_smooth(a)? - &rhs)
}

/// Every Betti-level quantity for one arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincareReport {
    pub smooth: UniPoly,
    pub ih: UniPoly,
    pub local_ih: Vec<(Flat, UniPoly)>,
    pub residuals: BTreeMap<String, UniPoly>,
}

impl PoincareReport {
    pub fn compute(a: &Arrangement) -> Result<Self> {
        let smooth = poincare_smooth(a)?;
        let ih = poincare_ih(a)?;
        let local_ih =
            a.flats().flats().iter().map(|f| Ok((*f, local_ih(a, f.members)?))).collect::<Result<Vec<_>>>()?;
        let spec = invariants::h_from_tutte(a)?;
        let residuals = BTreeMap::from([
            ("decomposition".to_string(), decomposition_residual(a)?),
            ("kl".to_string(), kl_residual(a)?),
            ("smooth_vs_tutte".to_string(), &smooth - &spec.h),
            ("ih_vs_tutte".to_string(), &ih - &spec.h_br),
        ]);
        Ok(PoincareReport { smooth, ih, local_ih, residuals })
    }

    pub fn residuals_vanish(&self) -> bool {
        self.residuals.values().all(UniPoly::is_zero)
    }
}

impl Serialize for PoincareReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Local<'a> {
            flat: &'a crate::Subset,
            ih: &'a UniPoly,
        }
        let local: Vec<Local> = self.local_ih.iter().map(|(f, p)| Local { flat: &f.members, ih: p }).collect();
        let mut st = s.serialize_struct("PoincareReport", 4)?;
        st.serialize_field("smooth", &self.smooth)?;
        st.serialize_field("ih", &self.ih)?;
        st.serialize_field("local_ih", &local)?;
        st.serialize_field("residuals", &self.residuals)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::Subset;

    fn s(labels: &[usize]) -> Subset {
        Subset::from_labels(labels).unwrap()
    }

    #[test]
    fn smooth_examples() {
        assert_eq!(poincare_smooth(&fixtures::k3()).unwrap(), UniPoly::new(&[1, 1, 1]));
        assert_eq!(poincare_smooth(&fixtures::b2()).unwrap(), UniPoly::one());
        assert_eq!(poincare_smooth(&fixtures::rep4()).unwrap(), UniPoly::new(&[1, 2, 2]));
    }

    #[test]
    fn ih_examples() {
        assert_eq!(poincare_ih(&fixtures::k3()).unwrap(), UniPoly::new(&[1, 1]));
        assert_eq!(poincare_ih(&fixtures::b2()).unwrap(), UniPoly::one());
        assert_eq!(poincare_ih(&fixtures::k4()).unwrap(), UniPoly::new(&[1, 3, 2]));
    }

    #[test]
    fn local_ih_examples() {
        assert_eq!(local_ih(&fixtures::k3(), Subset::EMPTY).unwrap(), UniPoly::one());
        assert_eq!(local_ih(&fixtures::k3(), s(&[1, 2, 3])).unwrap(), UniPoly::new(&[1, 1]));
        assert_eq!(local_ih(&fixtures::rep4(), s(&[2, 3])).unwrap(), UniPoly::one());
        assert!(local_ih(&fixtures::rep4(), s(&[2])).is_err());
    }

    #[test]
    fn residuals_vanish_on_fixtures() {
        for (name, a) in fixtures::catalog() {
            assert!(kl_residual(&a).unwrap().is_zero(), "kl {name}");
            assert!(decomposition_residual(&a).unwrap().is_zero(), "decomposition {name}");
        }
    }

    #[test]
    fn report_serializes() {
        let report = PoincareReport::compute(&fixtures::k3()).unwrap();
        assert!(report.residuals_vanish());
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.starts_with(r#"{"smooth":[1,1,1],"ih":[1,1],"local_ih":[{"flat":[],"ih":[1]}"#), "{json}");
    }

    #[test]
    fn ih_degree_is_below_rank() {
        for (_, a) in fixtures::catalog() {
            assert!(poincare_ih(&a).unwrap().degree().unwrap() < a.dim());
        }
    }
}
