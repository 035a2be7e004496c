//! Circuit polynomials and the rings they cut out.
//!
//! For a circuit `C` with dependency `lambda`, the circuit polynomial is
//! `f_C = sum_{i in C} sign(lambda_i) prod_{j in C, j != i} e_j`. The ring
//! `R(A)` is the quotient of `Q[e_1..e_n]` by all circuit polynomials, and
//! `R_0(A)` is further divided by the `d` linear forms `sum_i (a_i)_j e_i`.
//! All variables have degree 1.

mod groebner;
mod monomial;
mod multipoly;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use groebner::{buchberger, is_groebner_basis, reduce, s_polynomial, GroebnerRun};
pub use monomial::{krull_dimension, HilbertSeries, MonomialIdeal};
pub use multipoly::{Monomial, MultiPoly, OrderKind, TermOrder};

use crate::arrangement::{Arrangement, Circuit};
use crate::complexes::{broken_circuit_complex, check_order, SimplicialComplex};
use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::subset::Subset;

/// `f_C` in `Q[e_1..e_n]`.
pub fn circuit_polynomial(a: &Arrangement, c: &Circuit) -> MultiPoly {
    let n = a.n();
    let terms = c.members.iter().map(|i| {
        let exponent: Monomial = (0..n).map(|j| (j != i && c.members.contains(j)) as u32).collect();
        (exponent, c.signs[i].signum())
    });
    MultiPoly::from_terms(n, terms)
}

/// Circuit polynomials of every circuit, in circuit order.
pub fn circuit_ideal(a: &Arrangement) -> Vec<MultiPoly> {
    a.circuits().iter().map(|c| circuit_polynomial(a, c)).collect()
}

/// The `d` linear forms `sum_i (a_i)_j e_i`.
pub fn linear_forms(a: &Arrangement) -> Vec<MultiPoly> {
    a.matrix().iter().map(|row| MultiPoly::linear(row)).collect()
}

/// Stanley-Reisner ideal: generated by the minimal non-faces.
pub fn sr_ideal(complex: &SimplicialComplex) -> MonomialIdeal {
    MonomialIdeal::squarefree(complex.ground(), complex.minimal_nonfaces())
}

/// Leading monomials of a Gröbner basis.
pub fn initial_ideal(gb: &[MultiPoly], order: &TermOrder) -> MonomialIdeal {
    let n = gb.first().map_or(0, MultiPoly::nvars);
    MonomialIdeal::new(n, gb.iter().filter_map(|g| g.leading_monomial(order).cloned()))
}

/// Hilbert series of `Q[e_1..e_n] / I`.
pub fn hilbert_series_quotient(ideal: &MonomialIdeal) -> HilbertSeries {
    ideal.hilbert_series()
}

fn hilbert_of_generated(gens: &[MultiPoly], n: usize, order: &TermOrder) -> HilbertSeries {
    let run = buchberger(gens, order);
    let init = if run.basis.is_empty() { MonomialIdeal::new(n, []) } else { initial_ideal(&run.basis, order) };
    init.hilbert_series()
}

fn finite(series: HilbertSeries, what: &str) -> Result<UniPoly> {
    match series.polynomial() {
        Some(p) => Ok(p.clone()),
        None => Err(Error::Invariant(format!("{what} is not finite-dimensional: {series:?}"))),
    }
}

/// Hilbert series of `R_0(A)`; equals `h^br_A` when `A` is unimodular.
pub fn r0_hilbert(a: &Arrangement) -> Result<UniPoly> {
    a.require_central()?;
    crate::invariants::require_loopless(a)?;
    let mut gens = circuit_ideal(a);
    gens.extend(linear_forms(a));
    let order = TermOrder::identity(OrderKind::Grevlex, a.n());
    finite(hilbert_of_generated(&gens, a.n(), &order), "R_0(A)")
}

/// Hilbert series of `R(A) / <e_1^2, ..., e_n^2>`.
pub fn stratum_ring_hilbert(a: &Arrangement) -> Result<UniPoly> {
    a.require_central()?;
    let n = a.n();
    let mut gens = circuit_ideal(a);
    gens.extend((0..n).map(|i| {
        let mut e = vec![0; n];
        e[i] = 2;
        MultiPoly::from_terms(n, [(e, 1)])
    }));
    let order = TermOrder::identity(OrderKind::Grevlex, n);
    finite(hilbert_of_generated(&gens, n, &order), "R(A)/<e_i^2>")
}

/// Krull dimension of `R(A)`, through its initial ideal.
pub fn ring_krull_dimension(a: &Arrangement, order: &TermOrder) -> usize {
    let run = buchberger(&circuit_ideal(a), order);
    if run.basis.is_empty() {
        return a.n();
    }
    initial_ideal(&run.basis, order).krull_dimension()
}

/// Result of quotienting a Stanley-Reisner ring by generic linear forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LsopQuotient {
    pub seed: u64,
    pub attempts: usize,
    pub forms: Vec<Vec<i64>>,
    pub hilbert: UniPoly,
}

/// Appends `d` pseudorandom integer linear forms drawn from `seed` to the
/// Stanley-Reisner ideal, redrawing until the quotient is
/// finite-dimensional (the forms are then a linear system of parameters).
pub fn sr_lsop_hilbert(complex: &SimplicialComplex, d: usize, seed: u64) -> Result<LsopQuotient> {
    let n = complex.ground();
    let sr = sr_ideal(complex);
    let mut gens: Vec<MultiPoly> = sr.generators().iter().map(|m| MultiPoly::from_terms(n, [(m.clone(), 1)])).collect();
    let base = gens.len();
    let order = TermOrder::identity(OrderKind::Grevlex, n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=64 {
        let forms: Vec<Vec<i64>> = (0..d).map(|_| (0..n).map(|_| rng.gen_range(-9..=9)).collect()).collect();
        gens.truncate(base);
        gens.extend(forms.iter().map(|f| MultiPoly::linear(f)));
        if let Some(p) = hilbert_of_generated(&gens, n, &order).polynomial() {
            return Ok(LsopQuotient { seed, attempts: attempt, forms, hilbert: p.clone() });
        }
    }
    Err(Error::Invariant(format!("no linear system of parameters found from seed {seed}")))
}

/// Outcome of running Buchberger from the circuit polynomials in one order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UgbCheck {
    pub order: TermOrder,
    /// S-polynomials that did not reduce to zero.
    pub added: usize,
    /// The initial ideal is the broken-circuit ideal for the order's `sigma`.
    pub initial_matches: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UgbReport {
    pub checks: Vec<UgbCheck>,
    pub pass: bool,
}

/// Checks that the circuit polynomials form a Gröbner basis whose initial
/// ideal is the broken-circuit ideal, for each order.
pub fn verify_ugb(a: &Arrangement, orders: &[TermOrder]) -> Result<UgbReport> {
    a.require_central()?;
    let gens = circuit_ideal(a);
    let checks = orders
        .iter()
        .map(|order| {
            check_order(&order.sigma, a.n())?;
            let run = buchberger(&gens, order);
            let expected = sr_ideal(&broken_circuit_complex(a, &order.sigma)?);
            let actual =
                if run.basis.is_empty() { MonomialIdeal::new(a.n(), []) } else { initial_ideal(&run.basis, order) };
            let initial_matches = actual == expected;
            Ok(UgbCheck {
                order: order.clone(),
                added: run.added,
                initial_matches,
                pass: run.added == 0 && initial_matches,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let pass = checks.iter().all(|c| c.pass);
    Ok(UgbReport { checks, pass })
}

/// `count` lex orders with `sigma` drawn uniformly from `seed`.
pub fn sampled_lex_orders(n: usize, count: usize, seed: u64) -> Vec<TermOrder> {
    use rand::seq::SliceRandom;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut sigma: Vec<usize> = (0..n).collect();
            sigma.shuffle(&mut rng);
            TermOrder::lex(sigma)
        })
        .collect()
}

/// All `n!` lex orders.
pub fn all_lex_orders(n: usize) -> Vec<TermOrder> {
    fn extend(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<TermOrder>) {
        if prefix.len() == n {
            out.push(TermOrder::lex(prefix.clone()));
            return;
        }
        for i in 0..n {
            if !prefix.contains(&i) {
                prefix.push(i);
                extend(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), n, &mut out);
    out
}

/// The map `s: e_i -> e_i` for `i` in `F`, `e_i -> 0` otherwise, sends each
/// circuit polynomial of `A` either to zero or to a circuit polynomial of
/// the localization `A_F` (up to sign).
pub fn restriction_map_check(a: &Arrangement, f: Subset) -> Result<bool> {
    a.require_central()?;
    let local = a.localization(f)?;
    let outside: Vec<usize> = a.ground().difference(f).iter().collect();
    let rename: Vec<Option<usize>> = (0..a.n()).map(|i| local.labels.iter().position(|&l| l == i)).collect();
    let local_circuits = local.arrangement.circuits();
    for c in a.circuits() {
        let image = circuit_polynomial(a, &c).kill(&outside);
        if c.members.is_subset_of(f) {
            let image = image.rename(&rename, local.arrangement.n());
            let members = local.pull(c.members);
            let Some(target) = local_circuits.iter().find(|d| d.members == members) else {
                return Ok(false);
            };
            let target = circuit_polynomial(&local.arrangement, target);
            if image != target && image != -&target {
                return Ok(false);
            }
        } else if c.members.difference(f).len() < 2 || !image.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::matroid_complex;
    use crate::fixtures;

    fn s(labels: &[usize]) -> Subset {
        Subset::from_labels(labels).unwrap()
    }

    fn p(n: usize, terms: &[(&[u32], i64)]) -> MultiPoly {
        MultiPoly::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), *c)))
    }

    #[test]
    fn circuit_polynomial_examples() {
        let k3 = fixtures::k3();
        let c = &k3.circuits()[0];
        assert_eq!(circuit_polynomial(&k3, c), p(3, &[(&[0, 1, 1], 1), (&[1, 0, 1], 1), (&[1, 1, 0], -1)]));

        let rep4 = fixtures::rep4();
        let pair = rep4.circuits().into_iter().find(|c| c.members == s(&[2, 3])).unwrap();
        assert_eq!(circuit_polynomial(&rep4, &pair), p(4, &[(&[0, 0, 1, 0], 1), (&[0, 1, 0, 0], -1)]));

        let nu4 = fixtures::nu4();
        let explicit = Circuit { members: s(&[1, 3, 4]), signs: vec![-2, 0, 1, 1] };
        let expected = p(4, &[(&[0, 0, 1, 1], -1), (&[1, 0, 0, 1], 1), (&[1, 0, 1, 0], 1)]);
        assert_eq!(circuit_polynomial(&nu4, &explicit), expected);
        let normalized = nu4.circuits().into_iter().find(|c| c.members == s(&[1, 3, 4])).unwrap();
        assert_eq!(circuit_polynomial(&nu4, &normalized), -&expected);
    }

    #[test]
    fn sr_ideal_examples() {
        let k3 = fixtures::k3();
        assert_eq!(sr_ideal(&matroid_complex(&k3)).generators(), &[vec![1, 1, 1]]);
        assert_eq!(sr_ideal(&broken_circuit_complex(&k3, &[0, 1, 2]).unwrap()).generators(), &[vec![0, 1, 1]]);
        assert!(sr_ideal(&SimplicialComplex::simplex(3)).is_zero());
    }

    #[test]
    fn initial_ideal_examples() {
        let k3 = fixtures::k3();
        let order = TermOrder::lex(vec![0, 1, 2]);
        let run = buchberger(&circuit_ideal(&k3), &order);
        assert_eq!(initial_ideal(&run.basis, &order).generators(), &[vec![0, 1, 1]]);
        assert!(initial_ideal(&[], &order).is_zero());
    }

    #[test]
    fn k4_lex_initial_ideal_is_broken_circuit_ideal() {
        let k4 = fixtures::k4();
        let order = TermOrder::lex((0..6).collect());
        let run = buchberger(&circuit_ideal(&k4), &order);
        assert!(is_groebner_basis(&run.basis, &order));
        let bc = broken_circuit_complex(&k4, &order.sigma).unwrap();
        assert_eq!(initial_ideal(&run.basis, &order), sr_ideal(&bc));
    }

    #[test]
    fn hilbert_quotient_examples() {
        // Full R_0 ideal of K3.
        assert_eq!(r0_hilbert(&fixtures::k3()).unwrap(), UniPoly::new(&[1, 1]));
        assert_eq!(r0_hilbert(&fixtures::b2()).unwrap(), UniPoly::one());
        assert_eq!(r0_hilbert(&fixtures::k4()).unwrap(), UniPoly::new(&[1, 3, 2]));
        let lsop = sr_lsop_hilbert(&matroid_complex(&fixtures::k3()), 2, 7).unwrap();
        assert_eq!(lsop.hilbert, UniPoly::new(&[1, 1, 1]));
    }

    #[test]
    fn krull_examples() {
        let nu4 = fixtures::nu4();
        let order = TermOrder::lex((0..4).collect());
        assert_eq!(ring_krull_dimension(&nu4, &order), 1);
        let bc = broken_circuit_complex(&nu4, &order.sigma).unwrap();
        assert_eq!(krull_dimension(&sr_ideal(&bc)), 2);
    }

    #[test]
    fn ugb_examples() {
        let k3 = verify_ugb(&fixtures::k3(), &all_lex_orders(3)).unwrap();
        assert!(k3.pass);
        assert_eq!(k3.checks.len(), 6);
        assert!(verify_ugb(&fixtures::k4(), &sampled_lex_orders(6, 10, 1)).unwrap().pass);
        assert!(!verify_ugb(&fixtures::nu4(), &[TermOrder::lex((0..4).collect())]).unwrap().pass);
    }

    #[test]
    fn stratum_ring_examples() {
        assert_eq!(stratum_ring_hilbert(&fixtures::k3()).unwrap(), UniPoly::new(&[1, 3, 2]));
        assert_eq!(stratum_ring_hilbert(&fixtures::b2()).unwrap(), UniPoly::new(&[1, 2, 1]));
    }

    #[test]
    fn restriction_map_examples() {
        let k3 = fixtures::k3();
        assert!(restriction_map_check(&k3, s(&[1, 2, 3])).unwrap());
        assert!(restriction_map_check(&k3, s(&[1])).unwrap());
        assert!(restriction_map_check(&fixtures::rep4(), s(&[2, 3])).unwrap());
        assert!(restriction_map_check(&k3, s(&[1, 2])).is_err());
    }
}
