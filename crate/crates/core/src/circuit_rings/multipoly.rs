//! Multivariate polynomials with rational coefficients and term orders.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Exponent vector, one entry per variable.
pub type Monomial = Vec<u32>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    #[serde(alias = "graded-lex")]
    Grlex,
    #[serde(alias = "graded-reverse-lex")]
    Grevlex,
}

/// A monomial order. `sigma` lists the variables from smallest to largest,
/// so `sigma[0]` is the least variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TermOrder {
    pub kind: OrderKind,
    pub sigma: Vec<usize>,
}

impl TermOrder {
    pub fn new(kind: OrderKind, sigma: Vec<usize>) -> Self {
        TermOrder { kind, sigma }
    }

    pub fn lex(sigma: Vec<usize>) -> Self {
        Self::new(OrderKind::Lex, sigma)
    }

    /// `kind` with `e_n > ... > e_1`.
    pub fn identity(kind: OrderKind, n: usize) -> Self {
        Self::new(kind, (0..n).collect())
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self.kind {
            OrderKind::Lex => self.lex_cmp(a, b),
            OrderKind::Grlex => degree(a).cmp(&degree(b)).then_with(|| self.lex_cmp(a, b)),
            OrderKind::Grevlex => degree(a).cmp(&degree(b)).then_with(|| {
                self.sigma.iter().map(|&v| b[v].cmp(&a[v])).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
            }),
        }
    }

    fn lex_cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.sigma.iter().rev().map(|&v| a[v].cmp(&b[v])).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
    }
}

pub fn degree(m: &[u32]) -> u32 {
    m.iter().sum()
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

pub fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0)
}

/// Sparse polynomial in `nvars` variables over the rationals. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn term(nvars: usize, exponent: Monomial, coeff: BigRational) -> Self {
        assert_eq!(exponent.len(), nvars);
        let mut p = Self::zero(nvars);
        p.add_term(exponent, coeff);
        p
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        Self::term(nvars, vec![0; nvars], int(c))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::term(nvars, e, BigRational::one())
    }

    /// `sum_i coeffs[i] e_i`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let n = coeffs.len();
        coeffs.iter().enumerate().fold(Self::zero(n), |acc, (i, &c)| &acc + &Self::var(n, i).scale(&int(c)))
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, i64)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(e, int(c));
        }
        p
    }

    fn add_term(&mut self, exponent: Monomial, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exponent) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponent: &[u32]) -> BigRational {
        self.terms.get(exponent).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|e| degree(e));
        let first = degrees.next();
        degrees.all(|d| Some(d) == first)
    }

    /// Largest term under `order`.
    pub fn leading_term(&self, order: &TermOrder) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    /// `c * x^shift * self`.
    pub fn mul_term(&self, shift: &[u32], c: &BigRational) -> Self {
        let terms =
            self.terms.iter().map(|(e, x)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), x * c)).collect();
        MultiPoly { nvars: self.nvars, terms }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self, order: &TermOrder) -> Self {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Set the listed variables to zero.
    pub fn kill(&self, vars: &[usize]) -> Self {
        let terms = self.terms.iter().filter(|(e, _)| vars.iter().all(|&v| e[v] == 0));
        MultiPoly { nvars: self.nvars, terms: terms.map(|(e, c)| (e.clone(), c.clone())).collect() }
    }

    /// Rename variables: variable `i` becomes `map[i]` in a ring with
    /// `nvars` variables. Every variable occurring must be mapped.
    pub fn rename(&self, map: &[Option<usize>], nvars: usize) -> Self {
        let mut out = Self::zero(nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; nvars];
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    f[map[i].expect("variable has an image")] += x;
                }
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// Terms in decreasing `order`, written with variables `e1, e2, ...`.
    pub fn display_with(&self, order: &TermOrder) -> String {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.cmp(b.0, a.0));
        render(&terms)
    }
}

fn int(c: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(c))
}

fn render(terms: &[(&Monomial, &BigRational)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (e, c)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        let vars: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(|(i, &x)| if x == 1 { format!("e{}", i + 1) } else { format!("e{}^{x}", i + 1) })
            .collect();
        if !abs.is_one() || vars.is_empty() {
            out.push_str(&abs.to_string());
            if !vars.is_empty() {
                out.push('*');
            }
        }
        out.push_str(&vars.join("*"));
    }
    out
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&TermOrder::identity(OrderKind::Grevlex, self.nvars)))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        self.scale(&int(-1))
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &rhs.terms {
            for (f, d) in &self.terms {
                out.add_term(e.iter().zip(f).map(|(x, y)| x + y).collect(), c * d);
            }
        }
        out
    }
}
