//! Integer polynomials in one variable `q` and two variables `x, y`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

/// Dense integer polynomial in `q`; `coeffs[i]` is the coefficient of `q^i`.
/// Trailing zeros are always trimmed, so the zero polynomial is `[]`.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<i64>", into = "Vec<i64>")]
pub struct UniPoly {
    coeffs: Vec<i64>,
}

impl From<Vec<i64>> for UniPoly {
    fn from(coeffs: Vec<i64>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }
}

impl From<UniPoly> for Vec<i64> {
    fn from(p: UniPoly) -> Self {
        p.coeffs
    }
}

impl UniPoly {
    pub fn new(coeffs: &[i64]) -> Self {
        Self::from(coeffs.to_vec())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from(vec![c])
    }

    pub fn monomial(c: i64, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        Self::from(coeffs)
    }

    /// `(q - 1)^k`.
    pub fn q_minus_one_pow(k: usize) -> Self {
        UniPoly::new(&[-1, 1]).pow(k)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, q: i64) -> i64 {
        let v = self.coeffs.iter().rev().fold(0i128, |acc, &c| acc * q as i128 + c as i128);
        i64::try_from(v).expect("polynomial value exceeds i64")
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from(self.coeffs.iter().map(|x| x * c).collect::<Vec<_>>())
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        UniPoly { coeffs }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `q^n * p(1/q)`. Panics if `deg p > n`.
    pub fn reversed(&self, n: usize) -> Self {
        assert!(self.coeffs.len() <= n + 1, "degree {:?} exceeds reversal bound {n}", self.degree());
        let mut coeffs = vec![0; n + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[n - i] = c;
        }
        Self::from(coeffs)
    }

    /// `p / (1 - q)` when the division is exact.
    pub fn div_one_minus_q(&self) -> Option<Self> {
        // p = (1 - q) s  <=>  s_i = sum_{j <= i} p_j, with the full sum zero.
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.coeffs.len());
        for &c in &self.coeffs {
            acc += c;
            out.push(acc);
        }
        (acc == 0).then(|| Self::from(out))
    }

    /// Unique polynomial of degree `< points.len()` through the given
    /// values, provided its coefficients are integers.
    pub fn interpolate(points: &[(i64, i64)]) -> Option<Self> {
        let mut result = vec![BigRational::zero(); points.len()];
        for (i, &(xi, yi)) in points.iter().enumerate() {
            // Lagrange basis polynomial, built up coefficientwise.
            let mut basis = vec![BigRational::one()];
            let mut denom = BigRational::one();
            for (j, &(xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mut next = vec![BigRational::zero(); basis.len() + 1];
                for (k, b) in basis.iter().enumerate() {
                    next[k + 1] += b;
                    next[k] -= b * BigRational::from_integer(BigInt::from(xj));
                }
                basis = next;
                denom *= BigRational::from_integer(BigInt::from(xi - xj));
            }
            let factor = BigRational::from_integer(BigInt::from(yi)) / denom;
            for (r, b) in result.iter_mut().zip(&basis) {
                *r += b * &factor;
            }
        }
        let coeffs = result
            .into_iter()
            .map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None })
            .collect::<Option<Vec<_>>>()?;
        Some(Self::from(coeffs))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect::<Vec<_>>())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect::<Vec<_>>())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        self.scale(-1)
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(UniPoly, Add add, Sub sub, Mul mul);

impl AddAssign<&UniPoly> for UniPoly {
    fn add_assign(&mut self, rhs: &UniPoly) {
        *self = &*self + rhs;
    }
}

impl std::iter::Sum for UniPoly {
    fn sum<I: Iterator<Item = UniPoly>>(iter: I) -> Self {
        iter.fold(UniPoly::zero(), |acc, p| &acc + &p)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            write_term(f, c, &[("q", i)], &mut first)?;
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, c: i64, vars: &[(&str, usize)], first: &mut bool) -> fmt::Result {
    let sign = if c < 0 { "-" } else { "+" };
    if *first {
        if c < 0 {
            f.write_str("-")?;
        }
    } else {
        write!(f, " {sign} ")?;
    }
    *first = false;
    let abs = c.unsigned_abs();
    let has_vars = vars.iter().any(|&(_, e)| e > 0);
    if abs != 1 || !has_vars {
        write!(f, "{abs}")?;
    }
    for &(v, e) in vars {
        match e {
            0 => {}
            1 => f.write_str(v)?,
            _ => write!(f, "{v}^{e}")?,
        }
    }
    Ok(())
}

/// Sparse integer polynomial in `x, y`, keyed by `(deg_x, deg_y)`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), i64>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn monomial(c: i64, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), i64)>) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    fn add_term(&mut self, i: u32, j: u32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> i64 {
        self.terms.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn eval(&self, x: i64, y: i64) -> i64 {
        self.terms.iter().map(|(&(i, j), &c)| c * x.pow(i) * y.pow(j)).sum()
    }

    /// `p(x, y0)` as a polynomial in `x`.
    pub fn at_y(&self, y0: i64) -> UniPoly {
        let mut out = UniPoly::zero();
        for (&(i, j), &c) in &self.terms {
            out += &UniPoly::monomial(c * y0.pow(j), i as usize);
        }
        out
    }

    /// `p(x0, y)` as a polynomial in `y`.
    pub fn at_x(&self, x0: i64) -> UniPoly {
        let mut out = UniPoly::zero();
        for (&(i, j), &c) in &self.terms {
            out += &UniPoly::monomial(c * x0.pow(i), j as usize);
        }
        out
    }

    /// `f(x) * g(y)`.
    pub fn outer(fx: &UniPoly, gy: &UniPoly) -> Self {
        let mut p = Self::zero();
        for (i, &a) in fx.coeffs().iter().enumerate() {
            for (j, &b) in gy.coeffs().iter().enumerate() {
                p.add_term(i as u32, j as u32, a * b);
            }
        }
        p
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_terms(self.terms().map(|(k, v)| (k, v * c)))
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), &c) in &rhs.terms {
            out.add_term(i, j, c);
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), &c) in &rhs.terms {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), &a) in &self.terms {
            for (&(k, l), &b) in &rhs.terms {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }
}

forward_owned!(BiPoly, Add add, Sub sub, Mul mul);

impl std::iter::Sum for BiPoly {
    fn sum<I: Iterator<Item = BiPoly>>(iter: I) -> Self {
        iter.fold(BiPoly::zero(), |acc, p| &acc + &p)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        // Descending total degree reads more naturally.
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by_key(|&((i, j), _)| (std::cmp::Reverse(i + j), std::cmp::Reverse(i)));
        for ((i, j), c) in terms {
            write_term(f, c, &[("x", i as usize), ("y", j as usize)], &mut first)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            x: u32,
            y: u32,
            c: i64,
        }
        let terms: Vec<Term> = self.terms().map(|((x, y), c)| Term { x, y, c }).collect();
        let mut st = s.serialize_struct("BiPoly", 1)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_trimming() {
        let p = UniPoly::new(&[1, 1]);
        let q = UniPoly::new(&[-1, 1]);
        assert_eq!(&p * &q, UniPoly::new(&[-1, 0, 1]));
        assert_eq!(&p - &p, UniPoly::zero());
        assert_eq!(UniPoly::new(&[3, 0, 0]).coeffs(), &[3]);
        assert_eq!(UniPoly::q_minus_one_pow(2), UniPoly::new(&[1, -2, 1]));
        assert_eq!(UniPoly::new(&[2, -3, 1]).eval(5), 12);
    }

    #[test]
    fn reversal() {
        assert_eq!(UniPoly::new(&[1, 1]).reversed(4), UniPoly::new(&[0, 0, 0, 1, 1]));
        assert_eq!(UniPoly::new(&[1, 2, 2]).reversed(2), UniPoly::new(&[2, 2, 1]));
    }

    #[test]
    fn division_by_one_minus_q() {
        assert_eq!(UniPoly::new(&[1, 0, -1]).div_one_minus_q(), Some(UniPoly::new(&[1, 1])));
        assert_eq!(UniPoly::new(&[1, 1]).div_one_minus_q(), None);
    }

    #[test]
    fn interpolation_recovers_integer_polynomials() {
        let p = UniPoly::new(&[2, -3, 1]);
        let pts: Vec<_> = [2, 3, 5].iter().map(|&x| (x, p.eval(x))).collect();
        assert_eq!(UniPoly::interpolate(&pts), Some(p));
        assert_eq!(UniPoly::interpolate(&[(0, 0), (2, 1)]), None);
    }

    #[test]
    fn display() {
        assert_eq!(UniPoly::new(&[2, -3, 1]).to_string(), "2 - 3q + q^2");
        let t = BiPoly::from_terms([((2, 0), 1), ((1, 0), 1), ((0, 1), 1)]);
        assert_eq!(t.to_string(), "x^2 + x + y");
    }

    #[test]
    fn bivariate_specializations() {
        let t = BiPoly::from_terms([((2, 0), 1), ((1, 0), 1), ((0, 1), 1)]);
        assert_eq!(t.at_y(0), UniPoly::new(&[0, 1, 1]));
        assert_eq!(t.at_x(0), UniPoly::new(&[0, 1]));
        assert_eq!(t.eval(1, 1), 3);
        assert_eq!(&(&t * &BiPoly::one()) - &t, BiPoly::zero());
    }

    #[test]
    fn serialization_is_sorted() {
        let t = BiPoly::from_terms([((0, 1), 1), ((2, 0), 1), ((1, 0), 1)]);
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"terms":[{"x":0,"y":1,"c":1},{"x":1,"y":0,"c":1},{"x":2,"y":0,"c":1}]}"#
        );
        assert_eq!(serde_json::to_string(&UniPoly::new(&[1, 1, 0])).unwrap(), "[1,1]");
    }
}
