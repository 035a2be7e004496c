//! Exhaustive point counts over prime fields.
//!
//! Every count here is computed by brute-force enumeration and compared with
//! the polynomial predicted from the lattice of flats. A prime `p` is
//! admissible for an arrangement when reduction mod `p` preserves its matroid;
//! counts at smaller or inadmissible primes are still computed but flagged.

mod orbits;

use rayon::prelude::*;
use serde::Serialize;

pub use orbits::orbit_is_closed;

use crate::arrangement::Arrangement;
use crate::betti;
use crate::error::{Error, Result};
use crate::invariants::{characteristic_polynomial, num_regions};
use crate::lattice::{self, reduce_mod};
use crate::poly::UniPoly;
use crate::subset::{subsets_of_size, Subset};

/// Generic-stratum enumeration visits `q^(2n)` points; these bound it.
pub const STRATUM_MAX_N: usize = 5;
pub const STRATUM_MAX_Q: u64 = 7;

/// The field `F_p` for a prime `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(self) -> u64 {
        self.p
    }

    pub fn reduce(self, x: i64) -> u64 {
        reduce_mod(x, self.p)
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Primes `>= start`, in increasing order.
pub fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start.max(2)..).filter(|&p| is_prime(p))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub q: u64,
    pub raw_count: i64,
    pub normalized: i64,
    pub formula_value: i64,
    #[serde(rename = "match")]
    pub matches: bool,
    pub admissible: bool,
}

/// A subset of size at most `d` whose rank drops modulo `p`, if any.
pub fn rank_drop_mod_p(a: &Arrangement, p: u64) -> Option<Subset> {
    (1..=a.dim().min(a.n()))
        .flat_map(|size| subsets_of_size(a.n(), size))
        .find(|&s| lattice::rank_mod_p(&a.columns_of(s), p) != a.rank(s))
}

pub fn matroid_preserved_mod_p(a: &Arrangement, p: u64) -> bool {
    rank_drop_mod_p(a, p).is_none()
}

fn require_admissible(a: &Arrangement, p: u64) -> Result<()> {
    match rank_drop_mod_p(a, p) {
        Some(subset) => Err(Error::Inadmissible { prime: p, subset }),
        None => Ok(()),
    }
}

/// Sum of `f` over `F_q^n`, sharded across threads by leading coordinates.
/// The result does not depend on the sharding.
fn sum_over_space<F>(q: u64, n: usize, f: F) -> i64
where
    F: Fn(&[u64]) -> i64 + Sync,
{
    let mut lead = 0;
    while lead < n && q.pow(lead as u32) < 256 {
        lead += 1;
    }
    (0..q.pow(lead as u32))
        .into_par_iter()
        .map(|prefix| {
            let mut v = vec![0u64; n];
            let mut rest = prefix;
            for x in v[..lead].iter_mut() {
                *x = rest % q;
                rest /= q;
            }
            let mut total = 0;
            loop {
                total += f(&v);
                if !odometer(&mut v[lead..], q) {
                    return total;
                }
            }
        })
        .sum()
}

/// Advance `v` to the next vector of `F_q^len`; false after the last one.
fn odometer(v: &mut [u64], q: u64) -> bool {
    for x in v.iter_mut() {
        *x += 1;
        if *x < q {
            return true;
        }
        *x = 0;
    }
    false
}

fn reduced_columns(a: &Arrangement, q: u64) -> Vec<Vec<u64>> {
    a.columns().iter().map(|c| c.iter().map(|&x| reduce_mod(x, q)).collect()).collect()
}

/// `#{v in F_q^d : v . a_i != 0 for all i}`.
pub fn count_complement(a: &Arrangement, q: u64) -> Result<i64> {
    PrimeField::new(q)?;
    a.require_central()?;
    require_admissible(a, q)?;
    let cols = reduced_columns(a, q);
    Ok(sum_over_space(q, a.dim(), |v| {
        cols.iter().all(|c| c.iter().zip(v).map(|(x, y)| x * y).sum::<u64>() % q != 0) as i64
    }))
}

/// `#{z in F_q^n : {i : z_i = 0} is independent}`.
pub fn count_locally_free(a: &Arrangement, q: u64) -> Result<i64> {
    PrimeField::new(q)?;
    a.require_central()?;
    require_admissible(a, q)?;
    let independent: Vec<bool> = (0..1u32 << a.n()).map(|bits| a.is_independent(Subset::from_bits(bits))).collect();
    Ok(sum_over_space(q, a.n(), |z| {
        let zeros: u32 = z.iter().enumerate().filter(|(_, &x)| x == 0).map(|(i, _)| 1 << i).sum();
        independent[zeros as usize] as i64
    }))
}

/// `#{(z, w) in F_q^(2n) : B (z . w) = lam}` with `B` the kernel basis.
/// For each `z` the condition is linear in `w`.
pub fn count_moment_fiber(a: &Arrangement, lam: &[i64], q: u64) -> Result<i64> {
    PrimeField::new(q)?;
    let b = a.kernel_basis();
    check_lambda(a, lam)?;
    let n = a.n();
    let lam: Vec<u64> = lam.iter().map(|&x| reduce_mod(x, q)).collect();
    let b: Vec<Vec<u64>> = b.iter().map(|row| row.iter().map(|&x| reduce_mod(x, q)).collect()).collect();
    Ok(sum_over_space(q, n, |z| {
        let mut m: Vec<Vec<u64>> = b.iter().map(|row| row.iter().zip(z).map(|(x, y)| x * y % q).collect()).collect();
        let mut aug: Vec<Vec<u64>> =
            m.iter().zip(&lam).map(|(row, &l)| row.iter().copied().chain([l]).collect()).collect();
        let r = lattice::rank_mod_p_reduced(&mut m, q);
        if lattice::rank_mod_p_reduced(&mut aug, q) != r {
            return 0;
        }
        q.pow((n - r) as u32) as i64
    }))
}

fn check_lambda(a: &Arrangement, lam: &[i64]) -> Result<()> {
    if lam.len() != a.k() {
        return Err(Error::Parse(format!("lambda has {} entries, expected k = {}", lam.len(), a.k())));
    }
    Ok(())
}

/// Each circuit's dependency written in the kernel basis: `c` with `c B`
/// equal to the circuit's sign vector.
fn circuit_functionals(a: &Arrangement) -> Vec<(Subset, Vec<i64>)> {
    let b = a.kernel_basis();
    a.circuits()
        .into_iter()
        .map(|c| {
            let coords = lattice::coordinates_in(&b, &c.signs).expect("circuit dependencies lie in the kernel");
            (c.members, coords)
        })
        .collect()
}

fn dot(x: &[i64], y: &[i64]) -> i64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// `lam` is regular iff it pairs nontrivially with every circuit
/// dependency, i.e. avoids every hyperplane spanned by kernel weights.
pub fn is_regular_value(a: &Arrangement, lam: &[i64]) -> bool {
    lam.len() == a.k() && circuit_functionals(a).iter().all(|(_, c)| dot(c, lam) != 0)
}

/// A circuit at which `lam` fails to be regular modulo `p`, if any.
pub fn irregular_circuit_mod_p(a: &Arrangement, lam: &[i64], p: u64) -> Option<Subset> {
    circuit_functionals(a).into_iter().find(|(_, c)| dot(c, lam).rem_euclid(p as i64) == 0).map(|(s, _)| s)
}

/// The first `lam` in `{0..p-1}^k`, lexicographically, that is regular
/// modulo `p`, written with representatives in `(-p/2, p/2]`.
pub fn regular_value_mod_p(a: &Arrangement, p: u64) -> Option<Vec<i64>> {
    let functionals = circuit_functionals(a);
    let k = a.k();
    let mut lam = vec![0u64; k];
    loop {
        let signed: Vec<i64> = lam.iter().map(|&x| if 2 * x > p { x as i64 - p as i64 } else { x as i64 }).collect();
        if functionals.iter().all(|(_, c)| dot(c, &signed).rem_euclid(p as i64) != 0) {
            return Some(signed);
        }
        if !odometer(&mut lam, p) {
            return None;
        }
    }
}

fn kernel_torus_connected(a: &Arrangement) -> Result<()> {
    if !a.classify().kernel_torus_connected {
        return Err(Error::Unsupported("the kernel torus is disconnected".into()));
    }
    Ok(())
}

fn divide_by_torus(raw: i64, q: u64, k: usize) -> Result<i64> {
    let torus = (q as i64 - 1).pow(k as u32);
    if raw % torus != 0 {
        return Err(Error::Invariant(format!("count {raw} is not divisible by (q-1)^{k} = {torus}")));
    }
    Ok(raw / torus)
}

/// `q^(2d) h_A(1/q)`, the point count of the smooth hypertoric variety.
pub fn smooth_polynomial(a: &Arrangement) -> Result<UniPoly> {
    Ok(betti::poincare_smooth(a)?.reversed(2 * a.dim()))
}

/// Points of the smooth variety at level `lam`: the moment fiber count
/// divided by the size of the torus.
pub fn count_smooth_points(a: &Arrangement, lam: &[i64], q: u64) -> Result<CountReport> {
    PrimeField::new(q)?;
    a.require_central()?;
    check_lambda(a, lam)?;
    kernel_torus_connected(a)?;
    if !is_regular_value(a, lam) {
        return Err(Error::Unsupported(format!("{lam:?} is not a regular value")));
    }
    require_admissible(a, q)?;
    if let Some(subset) = irregular_circuit_mod_p(a, lam, q) {
        return Err(Error::Inadmissible { prime: q, subset });
    }
    let raw = count_moment_fiber(a, lam, q)?;
    let normalized = divide_by_torus(raw, q, a.k())?;
    let formula_value = smooth_polynomial(a)?.eval(q as i64);
    Ok(CountReport {
        q,
        raw_count: raw,
        normalized,
        formula_value,
        matches: normalized == formula_value,
        admissible: true,
    })
}

/// `(q-1)^d sum_F chi_{A^F}(q) r(A_F)`, the point count of the generic
/// stratum.
pub fn stratum_polynomial(a: &Arrangement) -> Result<UniPoly> {
    a.require_central()?;
    let mut sum = UniPoly::zero();
    for f in a.flats().flats() {
        let chi = characteristic_polynomial(&a.restriction(f.members)?.arrangement)?;
        sum += &chi.scale(num_regions(&a.localization(f.members)?.arrangement)?);
    }
    Ok(&UniPoly::q_minus_one_pow(a.dim()) * &sum)
}

/// Closed free orbits in the zero fiber with no coordinate pair vanishing,
/// counted by enumerating all of `F_q^(2n)`.
pub fn count_generic_stratum(a: &Arrangement, q: u64) -> Result<CountReport> {
    PrimeField::new(q)?;
    a.require_central()?;
    kernel_torus_connected(a)?;
    if a.n() > STRATUM_MAX_N || q > STRATUM_MAX_Q {
        return Err(Error::Unsupported(format!(
            "stratum enumeration is capped at n <= {STRATUM_MAX_N}, q <= {STRATUM_MAX_Q}"
        )));
    }
    let n = a.n();
    let b = a.kernel_basis();
    // Closedness depends only on which coordinates are nonzero: index the
    // pattern in base 3 with digit 0 (z only), 1 (w only), 2 (both).
    let patterns = 3usize.pow(n as u32);
    let closed: Vec<bool> = (0..patterns)
        .map(|mut idx| {
            let (mut z, mut w) = (vec![0u64; n], vec![0u64; n]);
            for i in 0..n {
                match idx % 3 {
                    0 => z[i] = 1,
                    1 => w[i] = 1,
                    _ => (z[i], w[i]) = (1, 1),
                }
                idx /= 3;
            }
            orbit_is_closed(&b, &z, &w)
        })
        .collect();
    let bq: Vec<Vec<u64>> = b.iter().map(|row| row.iter().map(|&x| reduce_mod(x, q)).collect()).collect();
    let raw = sum_over_space(q, n, |z| {
        let mut w = vec![0u64; n];
        let mut count = 0;
        loop {
            if z.iter().zip(&w).all(|(&x, &y)| x != 0 || y != 0)
                && bq.iter().all(|row| row.iter().zip(z).zip(&w).map(|((b, x), y)| b * x % q * y).sum::<u64>() % q == 0)
            {
                let pattern = (0..n).rev().fold(0, |acc, i| {
                    3 * acc
                        + match (z[i] != 0, w[i] != 0) {
                            (true, false) => 0,
                            (false, true) => 1,
                            _ => 2,
                        }
                });
                count += closed[pattern] as i64;
            }
            if !odometer(&mut w, q) {
                return count;
            }
        }
    });
    let normalized = divide_by_torus(raw, q, a.k())?;
    let formula_value = stratum_polynomial(a)?.eval(q as i64);
    Ok(CountReport {
        q,
        raw_count: raw,
        normalized,
        formula_value,
        matches: normalized == formula_value,
        admissible: matroid_preserved_mod_p(a, q),
    })
}

/// Points of the singular hypertoric variety, summed over the strata
/// `M(A^F)`.
pub fn count_hypertoric(a: &Arrangement, q: u64) -> Result<i64> {
    Ok(hypertoric_report(a, q)?.normalized)
}

/// [`count_hypertoric`] with the stratum-sum formula alongside.
pub fn hypertoric_report(a: &Arrangement, q: u64) -> Result<CountReport> {
    a.require_central()?;
    let (mut raw, mut normalized, mut formula_value) = (0, 0, 0);
    let mut admissible = true;
    for f in a.flats().flats() {
        let report = count_generic_stratum(&a.restriction(f.members)?.arrangement, q)?;
        raw += report.raw_count;
        normalized += report.normalized;
        formula_value += report.formula_value;
        admissible &= report.admissible;
    }
    Ok(CountReport { q, raw_count: raw, normalized, formula_value, matches: normalized == formula_value, admissible })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn primes() {
        assert!(PrimeField::new(7).is_ok());
        assert_eq!(PrimeField::new(9), Err(Error::NotPrime(9)));
        assert_eq!(primes_from(8).take(3).collect::<Vec<_>>(), vec![11, 13, 17]);
    }

    #[test]
    fn admissibility_examples() {
        assert!(matroid_preserved_mod_p(&fixtures::k3(), 2));
        assert!(!matroid_preserved_mod_p(&fixtures::nu4(), 2));
        assert!(matroid_preserved_mod_p(&fixtures::b2(), 2));
        assert!(matches!(count_complement(&fixtures::nu4(), 2), Err(Error::Inadmissible { prime: 2, .. })));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(count_complement(&fixtures::k3(), 5).unwrap(), 12);
        assert_eq!(count_complement(&fixtures::b2(), 3).unwrap(), 4);
        assert_eq!(count_complement(&fixtures::k3(), 3).unwrap(), 2);
    }

    #[test]
    fn locally_free_examples() {
        assert_eq!(count_locally_free(&fixtures::k3(), 2).unwrap(), 7);
        assert_eq!(count_locally_free(&fixtures::b2(), 3).unwrap(), 9);
        assert_eq!(count_locally_free(&fixtures::k3(), 3).unwrap(), 26);
    }

    #[test]
    fn moment_fiber_examples() {
        assert_eq!(count_moment_fiber(&fixtures::k3(), &[0], 2).unwrap(), 36);
        assert_eq!(count_moment_fiber(&fixtures::k3(), &[1], 2).unwrap(), 28);
        assert_eq!(count_moment_fiber(&fixtures::b2(), &[], 3).unwrap(), 81);
        assert!(count_moment_fiber(&fixtures::k3(), &[], 3).is_err());
    }

    #[test]
    fn moment_fiber_matches_brute_force() {
        let a = fixtures::k3();
        let b = a.kernel_basis();
        for q in [2u64, 3] {
            for lam in 0..q as i64 {
                let mut brute = 0;
                for idx in 0..q.pow(6) {
                    let v: Vec<i64> = (0..6).map(|i| (idx / q.pow(i) % q) as i64).collect();
                    let zw: Vec<i64> = (0..3).map(|i| v[i] * v[i + 3]).collect();
                    brute += ((lattice::mat_vec(&b, &zw)[0] - lam).rem_euclid(q as i64) == 0) as i64;
                }
                assert_eq!(count_moment_fiber(&a, &[lam], q).unwrap(), brute, "q={q} lam={lam}");
            }
        }
    }

    #[test]
    fn regular_value_examples() {
        assert!(is_regular_value(&fixtures::k3(), &[1]));
        assert!(!is_regular_value(&fixtures::k3(), &[0]));
        assert!(is_regular_value(&fixtures::b2(), &[]));
        // The parallel pair of REP4 forces a condition no single flat sees.
        let rep4 = fixtures::rep4();
        let lam = regular_value_mod_p(&rep4, 3).unwrap();
        assert!(is_regular_value(&rep4, &lam));
        assert_eq!(regular_value_mod_p(&rep4, 2), None);
    }

    #[test]
    fn smooth_examples() {
        let k3_2 = count_smooth_points(&fixtures::k3(), &[1], 2).unwrap();
        assert_eq!((k3_2.normalized, k3_2.formula_value, k3_2.matches), (28, 28, true));
        let k3_3 = count_smooth_points(&fixtures::k3(), &[1], 3).unwrap();
        assert_eq!((k3_3.normalized, k3_3.matches), (117, true));
        let b2 = count_smooth_points(&fixtures::b2(), &[], 3).unwrap();
        assert_eq!((b2.normalized, b2.matches), (81, true));
        assert!(matches!(count_smooth_points(&fixtures::k3(), &[0], 3), Err(Error::Unsupported(_))));
    }

    #[test]
    fn stratum_examples() {
        let k3 = count_generic_stratum(&fixtures::k3(), 2).unwrap();
        assert_eq!((k3.raw_count, k3.normalized, k3.formula_value), (12, 12, 12));
        let b2 = count_generic_stratum(&fixtures::b2(), 3).unwrap();
        assert_eq!((b2.normalized, b2.formula_value), (64, 64));
        let k3_3 = count_generic_stratum(&fixtures::k3(), 3).unwrap();
        assert_eq!((k3_3.normalized, k3_3.matches), (80, true));
        assert!(matches!(count_generic_stratum(&fixtures::k4(), 2), Err(Error::Unsupported(_))));
    }

    #[test]
    fn hypertoric_examples() {
        assert_eq!(count_hypertoric(&fixtures::k3(), 2).unwrap(), 22);
        assert_eq!(count_hypertoric(&Arrangement::empty(), 3).unwrap(), 1);
        let b2 = hypertoric_report(&fixtures::b2(), 2).unwrap();
        assert!(b2.matches);
    }

    #[test]
    fn sharding_does_not_change_sums() {
        let direct: i64 = (0..3u64.pow(7)).map(|i| (i % 5) as i64).sum();
        let sharded = sum_over_space(3, 7, |v| {
            (v.iter().enumerate().map(|(i, x)| x * 3u64.pow(i as u32)).sum::<u64>() % 5) as i64
        });
        assert_eq!(direct, sharded);
    }
}
