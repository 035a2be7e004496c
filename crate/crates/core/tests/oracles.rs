use hyparr_core::betti::{decomposition_residual, kl_residual, poincare_ih, poincare_smooth};
use hyparr_core::fixtures::{self, random_family};
use hyparr_core::invariants::{self, characteristic_polynomial, krs_residual, tutte_whitney};
use hyparr_core::verify::{interpolate_complement, RANDOM_COUNT, RANDOM_SEED};
use hyparr_core::{Arrangement, UniPoly};

fn instances() -> Vec<(String, Arrangement)> {
    let mut out: Vec<(String, Arrangement)> =
        fixtures::catalog().into_iter().map(|(n, a)| (n.to_string(), a)).collect();
    out.extend(
        random_family(RANDOM_SEED, RANDOM_COUNT, 6, 3)
            .into_iter()
            .enumerate()
            .map(|(i, a)| (format!("random-{i:02}"), a)),
    );
    out
}

#[test]
fn tutte_matches_subset_expansion() {
    for (name, a) in instances() {
        assert_eq!(invariants::tutte(&a), tutte_whitney(&a), "{name}");
    }
}

#[test]
fn residuals_vanish() {
    for (name, a) in instances() {
        assert!(krs_residual(&a).unwrap().is_zero(), "krs {name}");
        assert!(kl_residual(&a).unwrap().is_zero(), "kl {name}");
        assert!(decomposition_residual(&a).unwrap().is_zero(), "decomposition {name}");
    }
}

#[test]
fn poincare_polynomials_match_tutte() {
    for (name, a) in instances() {
        let spec = invariants::h_from_tutte(&a).unwrap();
        assert_eq!(poincare_smooth(&a).unwrap(), spec.h, "{name}");
        assert_eq!(poincare_ih(&a).unwrap(), spec.h_br, "{name}");
        assert_eq!(spec.h.coeff(a.dim()), spec.h_top, "{name}");
    }
}

#[test]
fn characteristic_polynomial_by_interpolation() {
    for (name, a) in instances().into_iter().take(12) {
        assert_eq!(interpolate_complement(&a).unwrap(), characteristic_polynomial(&a).unwrap(), "{name}");
    }
}

#[test]
fn k4_values() {
    let k4 = fixtures::k4();
    assert_eq!(poincare_smooth(&k4).unwrap(), UniPoly::new(&[1, 3, 6, 6]));
    assert_eq!(poincare_ih(&k4).unwrap(), UniPoly::new(&[1, 3, 2]));
    assert_eq!(invariants::num_regions(&k4).unwrap(), 24);
}
