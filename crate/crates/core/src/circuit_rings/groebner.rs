//! Buchberger's algorithm over the rationals.

use std::collections::VecDeque;

use num_rational::BigRational;

use super::multipoly::{coprime, divides, lcm, Monomial, MultiPoly, TermOrder};

/// A reduced Gröbner basis together with how many S-polynomials failed to
/// reduce to zero along the way.
#[derive(Clone, Debug)]
pub struct GroebnerRun {
    pub basis: Vec<MultiPoly>,
    /// Zero iff the monic input was already a Gröbner basis.
    pub added: usize,
}

/// Remainder of `f` on division by `divisors`, fully reduced.
pub fn reduce(f: &MultiPoly, divisors: &[MultiPoly], order: &TermOrder) -> MultiPoly {
    let leads: Vec<(Monomial, BigRational)> = divisors
        .iter()
        .map(|g| {
            let (m, c) = g.leading_term(order).expect("divisors are nonzero");
            (m.clone(), c.clone())
        })
        .collect();
    let mut p = f.clone();
    let mut remainder = MultiPoly::zero(f.nvars());
    while let Some((m, c)) = p.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        match leads.iter().position(|(lm, _)| divides(lm, &m)) {
            Some(i) => {
                let (lm, lc) = &leads[i];
                let shift: Monomial = m.iter().zip(lm).map(|(a, b)| a - b).collect();
                p = &p - &divisors[i].mul_term(&shift, &(&c / lc));
            }
            None => {
                let lead = MultiPoly::term(f.nvars(), m, c);
                remainder = &remainder + &lead;
                p = &p - &lead;
            }
        }
    }
    remainder
}

/// `lcm/lt(f) * f - lcm/lt(g) * g` for monic `f`, `g`.
pub fn s_polynomial(f: &MultiPoly, g: &MultiPoly, order: &TermOrder) -> MultiPoly {
    let (mf, cf) = f.leading_term(order).expect("nonzero");
    let (mg, cg) = g.leading_term(order).expect("nonzero");
    let l = lcm(mf, mg);
    let sf: Monomial = l.iter().zip(mf).map(|(a, b)| a - b).collect();
    let sg: Monomial = l.iter().zip(mg).map(|(a, b)| a - b).collect();
    &f.mul_term(&sf, &cf.recip()) - &g.mul_term(&sg, &cg.recip())
}

/// Reduced Gröbner basis of the ideal generated by `gens`, sorted by
/// decreasing leading monomial. Pairs with coprime leading monomials are
/// skipped.
pub fn buchberger(gens: &[MultiPoly], order: &TermOrder) -> GroebnerRun {
    let mut basis: Vec<MultiPoly> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic(order)).collect();
    let mut pairs: VecDeque<(usize, usize)> = (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut added = 0;
    while let Some((i, j)) = pairs.pop_front() {
        let (li, lj) = (basis[i].leading_monomial(order).unwrap(), basis[j].leading_monomial(order).unwrap());
        if coprime(li, lj) {
            continue;
        }
        let r = reduce(&s_polynomial(&basis[i], &basis[j], order), &basis, order);
        if r.is_zero() {
            continue;
        }
        added += 1;
        basis.push(r.monic(order));
        let new = basis.len() - 1;
        pairs.extend((0..new).map(|i| (i, new)));
    }
    GroebnerRun { basis: interreduce(basis, order), added }
}

/// Minimal, fully reduced, monic form of a Gröbner basis.
fn interreduce(mut basis: Vec<MultiPoly>, order: &TermOrder) -> Vec<MultiPoly> {
    basis.sort_by(|a, b| order.cmp(a.leading_monomial(order).unwrap(), b.leading_monomial(order).unwrap()));
    // Drop elements whose leading monomial is divisible by an earlier one.
    let mut minimal: Vec<MultiPoly> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial(order).unwrap().clone();
        if !minimal.iter().any(|h| divides(h.leading_monomial(order).unwrap(), &lm)) {
            minimal.push(g);
        }
    }
    let reduced: Vec<MultiPoly> = (0..minimal.len())
        .map(|i| {
            let others: Vec<MultiPoly> =
                minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
            let lead = MultiPoly::term(
                minimal[i].nvars(),
                minimal[i].leading_monomial(order).unwrap().clone(),
                minimal[i].leading_term(order).unwrap().1.clone(),
            );
            &lead + &reduce(&(&minimal[i] - &lead), &others, order)
        })
        .collect();
    let mut out: Vec<MultiPoly> = reduced.into_iter().map(|g| g.monic(order)).collect();
    out.sort_by(|a, b| order.cmp(b.leading_monomial(order).unwrap(), a.leading_monomial(order).unwrap()));
    out
}

/// Every S-polynomial reduces to zero.
pub fn is_groebner_basis(basis: &[MultiPoly], order: &TermOrder) -> bool {
    (0..basis.len()).all(|j| (0..j).all(|i| reduce(&s_polynomial(&basis[i], &basis[j], order), basis, order).is_zero()))
}
