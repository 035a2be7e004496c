//! Monomial ideals, Hilbert series of their quotients, and Krull dimension.

use serde::Serialize;

use super::multipoly::{coprime, degree, divides, Monomial};
use crate::poly::UniPoly;
use crate::subset::Subset;

/// A monomial ideal by its minimal generators, sorted by degree and then
/// exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().inspect(|g| assert_eq!(g.len(), nvars)).collect();
        all.sort_by(|a, b| degree(a).cmp(&degree(b)).then_with(|| a.cmp(b)));
        all.dedup();
        let mut generators: Vec<Monomial> = Vec::new();
        for g in all {
            if !generators.iter().any(|h| divides(h, &g)) {
                generators.push(g);
            }
        }
        MonomialIdeal { nvars, generators }
    }

    /// Squarefree ideal generated by `prod_{i in S} e_i` for each `S`.
    pub fn squarefree(nvars: usize, subsets: impl IntoIterator<Item = Subset>) -> Self {
        Self::new(nvars, subsets.into_iter().map(|s| (0..nvars).map(|i| s.contains(i) as u32).collect()))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, m: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(g, m))
    }

    /// `I : m`.
    pub fn quotient(&self, m: &[u32]) -> Self {
        Self::new(
            self.nvars,
            self.generators.iter().map(|g| g.iter().zip(m).map(|(&a, &b)| a.saturating_sub(b)).collect()),
        )
    }

    /// Numerator `N` of the Hilbert series `N(q) / (1 - q)^n` of the quotient
    /// ring, via `N(J + <m>) = N(J) - q^deg(m) N(J : m)`.
    pub fn hilbert_numerator(&self) -> UniPoly {
        if self.generators.iter().all(|g| self.generators.iter().all(|h| g == h || coprime(g, h))) {
            // Pairwise coprime generators form a regular sequence.
            return self
                .generators
                .iter()
                .fold(UniPoly::one(), |acc, g| &acc * &(&UniPoly::one() - &UniPoly::monomial(1, degree(g) as usize)));
        }
        let (last, rest) = self.generators.split_last().expect("a non-coprime ideal has generators");
        let j = MonomialIdeal { nvars: self.nvars, generators: rest.to_vec() };
        let colon = j.quotient(last);
        &j.hilbert_numerator() - &colon.hilbert_numerator().shift(degree(last) as usize)
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        HilbertSeries::new(self.hilbert_numerator(), self.nvars)
    }

    /// Largest set of variables containing the support of no generator.
    pub fn krull_dimension(&self) -> usize {
        let supports: Vec<Subset> = self
            .generators
            .iter()
            .map(|g| g.iter().enumerate().filter(|(_, &x)| x > 0).map(|(i, _)| i).collect())
            .collect();
        Subset::full(self.nvars)
            .subsets()
            .filter(|s| supports.iter().all(|g| !g.is_subset_of(*s)))
            .map(|s| s.len())
            .max()
            .unwrap_or(0)
    }
}

/// `numerator(q) / (1 - q)^denominator_power` in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    pub numerator: UniPoly,
    pub denominator_power: usize,
}

impl HilbertSeries {
    pub fn new(mut numerator: UniPoly, mut power: usize) -> Self {
        while power > 0 {
            match numerator.div_one_minus_q() {
                Some(p) => {
                    numerator = p;
                    power -= 1;
                }
                None => break,
            }
        }
        HilbertSeries { numerator, denominator_power: power }
    }

    /// The series as a polynomial, when the quotient is finite-dimensional.
    pub fn polynomial(&self) -> Option<&UniPoly> {
        (self.denominator_power == 0).then_some(&self.numerator)
    }
}

/// Krull dimension of `k[e_1..e_n] / I`.
pub fn krull_dimension(ideal: &MonomialIdeal) -> usize {
    ideal.krull_dimension()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_generators() {
        let i = MonomialIdeal::new(2, [vec![2, 1], vec![1, 0], vec![1, 0], vec![0, 3]]);
        assert_eq!(i.generators(), &[vec![1, 0], vec![0, 3]]);
        assert!(i.contains(&[3, 3]));
        assert!(!i.contains(&[0, 2]));
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(MonomialIdeal::new(1, [vec![2]]).hilbert_series().polynomial(), Some(&UniPoly::new(&[1, 1])));
        let zero = MonomialIdeal::new(3, []);
        assert_eq!(zero.hilbert_series(), HilbertSeries { numerator: UniPoly::one(), denominator_power: 3 });
        // k[x,y]/<x^2, xy, y^2> = 1 + 2q.
        let m2 = MonomialIdeal::new(2, [vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(m2.hilbert_series().polynomial(), Some(&UniPoly::new(&[1, 2])));
        // k[x,y,z]/<xy, yz>: numerator 1 - 2q^2 + q^3 = (1-q)(1+q-q^2).
        let path = MonomialIdeal::new(3, [vec![1, 1, 0], vec![0, 1, 1]]);
        assert_eq!(path.hilbert_series(), HilbertSeries { numerator: UniPoly::new(&[1, 1, -1]), denominator_power: 2 });
    }

    #[test]
    fn krull_examples() {
        assert_eq!(MonomialIdeal::new(2, [vec![1, 1]]).krull_dimension(), 1);
        assert_eq!(MonomialIdeal::new(3, []).krull_dimension(), 3);
        assert_eq!(MonomialIdeal::new(3, [vec![1, 1, 0], vec![0, 1, 1]]).krull_dimension(), 2);
        assert_eq!(MonomialIdeal::new(1, [vec![0]]).krull_dimension(), 0);
    }
}
