//! Exact integer linear algebra: fraction-free elimination, Hermite normal
//! form, saturated integer kernels and reduction modulo a prime.
//!
//! Matrices are row-major `&[Vec<i64>]`. Elimination first runs in `i128`
//! with checked arithmetic and falls back to `BigInt` on overflow, so every
//! answer is exact regardless of entry size.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

trait Exact: Clone + Zero + One + PartialEq + CheckedMul + CheckedSub + CheckedDiv + std::ops::Neg<Output = Self> {}
impl Exact for i128 {}
impl Exact for BigInt {}

/// Bareiss elimination. Returns `(rank, det)` where `det` is only meaningful
/// for square input. `None` signals overflow of the scalar type.
fn bareiss<T: Exact>(mut m: Vec<Vec<T>>) -> Option<(usize, T)> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut rank = 0;
    let mut negate = false;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !m[i][col].is_zero()) else { continue };
        if p != rank {
            m.swap(p, rank);
            negate = !negate;
        }
        for i in rank + 1..nrows {
            for j in col + 1..ncols {
                let a = m[i][j].checked_mul(&m[rank][col])?;
                let b = m[i][col].checked_mul(&m[rank][j])?;
                m[i][j] = a.checked_sub(&b)?.checked_div(&prev)?;
            }
            m[i][col] = T::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    let det = if nrows == ncols && rank == nrows {
        if negate {
            -prev
        } else {
            prev
        }
    } else {
        T::zero()
    };
    Some((rank, det))
}

fn to_i128(rows: &[Vec<i64>]) -> Vec<Vec<i128>> {
    rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect()
}

fn to_big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// Rational rank of a matrix.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    match bareiss(to_i128(rows)) {
        Some((r, _)) => r,
        None => bareiss(to_big(rows)).expect("BigInt elimination cannot overflow").0,
    }
}

/// Rank of a family of vectors given by reference.
pub fn rank_of<'a, I>(vectors: I) -> usize
where
    I: IntoIterator<Item = &'a Vec<i64>>,
{
    let rows: Vec<Vec<i64>> = vectors.into_iter().cloned().collect();
    rank(&rows)
}

/// Determinant of a square matrix.
pub fn determinant(rows: &[Vec<i64>]) -> BigInt {
    assert!(rows.iter().all(|r| r.len() == rows.len()), "determinant of a non-square matrix");
    if rows.is_empty() {
        return BigInt::one();
    }
    match bareiss(to_i128(rows)) {
        Some((_, d)) => BigInt::from(d),
        None => bareiss(to_big(rows)).expect("BigInt elimination cannot overflow").1,
    }
}

/// Row echelon form by unimodular row operations on the first `pivot_cols`
/// columns. Returns the transformed matrix and the number of pivot rows;
/// rows past that count are zero in the pivot columns.
fn unimodular_echelon(mut m: Vec<Vec<BigInt>>, pivot_cols: usize, reduce_above: bool) -> (Vec<Vec<BigInt>>, usize) {
    let nrows = m.len();
    let mut r = 0;
    for col in 0..pivot_cols {
        if r == nrows {
            break;
        }
        // Euclid on the column until a single nonzero entry remains at row r.
        loop {
            let nonzero: Vec<usize> = (r..nrows).filter(|&i| !m[i][col].is_zero()).collect();
            if nonzero.is_empty() {
                break;
            }
            let p = *nonzero.iter().min_by_key(|&&i| m[i][col].abs()).unwrap();
            m.swap(p, r);
            let mut done = true;
            for i in r + 1..nrows {
                if m[i][col].is_zero() {
                    continue;
                }
                let q = m[i][col].div_floor(&m[r][col]);
                let (head, tail) = m.split_at_mut(i);
                for (x, y) in tail[0].iter_mut().zip(&head[r]) {
                    *x -= &q * y;
                }
                if !m[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if m[r][col].is_zero() {
            continue;
        }
        if m[r][col].is_negative() {
            for x in m[r].iter_mut() {
                *x = -x.clone();
            }
        }
        if reduce_above {
            for i in 0..r {
                let q = m[i][col].div_floor(&m[r][col]);
                if q.is_zero() {
                    continue;
                }
                let (head, tail) = m.split_at_mut(r);
                for (x, y) in head[i].iter_mut().zip(&tail[0]) {
                    *x -= &q * y;
                }
            }
        }
        r += 1;
    }
    (m, r)
}

/// Row Hermite normal form; zero rows are dropped. Canonical for the row
/// lattice: two matrices have the same HNF iff their rows span the same lattice.
pub fn hnf(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let (m, r) = unimodular_echelon(to_big(rows), ncols, true);
    m.into_iter().take(r).map(|row| narrow(&row)).collect()
}

fn narrow(row: &[BigInt]) -> Vec<i64> {
    row.iter().map(|x| x.to_i64().expect("lattice entry exceeds i64")).collect()
}

/// Lattice basis (in Hermite normal form) of `{x in Z^ncols : M x = 0}`.
///
/// The result is saturated: it spans every integer solution, not just a
/// finite-index sublattice.
pub fn integer_kernel(rows: &[Vec<i64>], ncols: usize) -> Vec<Vec<i64>> {
    let m = rows.len();
    // Transpose, append the identity, and eliminate on the first m columns.
    let aug: Vec<Vec<BigInt>> = (0..ncols)
        .map(|j| {
            let mut row: Vec<BigInt> = rows.iter().map(|r| BigInt::from(r[j])).collect();
            row.extend((0..ncols).map(|t| if t == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let (ech, r) = unimodular_echelon(aug, m, false);
    let kernel: Vec<Vec<i64>> = ech[r..].iter().map(|row| narrow(&row[m..])).collect();
    if kernel.is_empty() {
        return kernel;
    }
    hnf(&kernel)
}

/// Integer coordinates of `v` in a basis that is in row echelon form with
/// positive pivots (e.g. output of [`hnf`]), if `v` lies in its lattice.
pub fn coordinates_in(basis: &[Vec<i64>], v: &[i64]) -> Option<Vec<i64>> {
    let mut residual: Vec<i128> = v.iter().map(|&x| x as i128).collect();
    let mut coords = Vec::with_capacity(basis.len());
    let mut col = 0;
    for row in basis {
        while col < row.len() && row[col] == 0 {
            if residual[col] != 0 {
                return None;
            }
            col += 1;
        }
        let pivot = row[col] as i128;
        if residual[col] % pivot != 0 {
            return None;
        }
        let c = residual[col] / pivot;
        for (x, &y) in residual.iter_mut().zip(row) {
            *x -= c * y as i128;
        }
        coords.push(i64::try_from(c).ok()?);
        col += 1;
    }
    residual.iter().all(|&x| x == 0).then_some(coords)
}

/// Rank over the prime field `F_p`.
pub fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&x| reduce_mod(x, p)).collect()).collect();
    rank_mod_p_reduced(&mut m, p)
}

pub fn reduce_mod(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

/// Rank of an already reduced matrix; destroys its contents.
pub fn rank_mod_p_reduced(m: &mut [Vec<u64>], p: u64) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| m[i][col] != 0) else { continue };
        m.swap(piv, r);
        let inv = inverse_mod(m[r][col], p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut().take(nrows - r - 1) {
            if row[col] == 0 {
                continue;
            }
            let factor = row[col] * inv % p;
            for (x, &y) in row[col..ncols].iter_mut().zip(&pivot_row[col..ncols]) {
                *x = (*x + p - factor * y % p) % p;
            }
        }
        r += 1;
    }
    r
}

/// Inverse of a nonzero residue modulo a prime.
pub(crate) fn inverse_mod(a: u64, p: u64) -> u64 {
    let (g, x, _) = ext_gcd(a as i128, p as i128);
    debug_assert_eq!(g, 1);
    x.rem_euclid(p as i128) as u64
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Multiply a `k x n` integer matrix by an `n`-vector.
pub fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_determinant_small() {
        assert_eq!(rank(&[vec![1, 0, 1], vec![0, 1, 1]]), 2);
        assert_eq!(rank(&[vec![0, 1], vec![0, 1]]), 1);
        assert_eq!(rank(&[]), 0);
        assert_eq!(determinant(&[vec![1, 1], vec![1, -1]]), BigInt::from(-2));
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(determinant(&[vec![2, 4], vec![1, 2]]), BigInt::zero());
    }

    #[test]
    fn rank_survives_overflow_of_i128() {
        let big = 1i64 << 60;
        let r1 = vec![big, big - 1, big + 3, 5];
        let r2 = vec![big - 7, big, -big, 11];
        let r3 = vec![-big, big + 13, big - 2, big];
        let r4: Vec<i64> = (0..4).map(|j| r1[j] + r2[j] - r3[j]).collect();
        let rows = vec![r1, r2, r3, r4];
        assert!(bareiss(to_i128(&rows)).is_none());
        assert_eq!(rank(&rows), 3);
    }

    #[test]
    fn kernel_of_triangle() {
        let k = integer_kernel(&[vec![1, 0, 1], vec![0, 1, 1]], 3);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert!(v == &vec![1, 1, -1] || v == &vec![-1, -1, 1]);
    }

    #[test]
    fn kernel_is_saturated() {
        // 2x = 0 over the integers in Z^1 has only x = 0; x - 2y = 0 has (2, 1).
        assert!(integer_kernel(&[vec![2]], 1).is_empty());
        assert_eq!(integer_kernel(&[vec![2, 4]], 2), vec![vec![2, -1]]);
        // Kernel of (2, 0) in Z^2 is spanned by (0, 1).
        assert_eq!(integer_kernel(&[vec![2, 0]], 2), vec![vec![0, 1]]);
    }

    #[test]
    fn kernel_of_zero_rows_is_identity() {
        assert_eq!(integer_kernel(&[], 2), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn hnf_is_canonical() {
        let a = hnf(&[vec![0, 1, -1, 0], vec![1, 1, 0, -1]]);
        let b = hnf(&[vec![1, 2, -1, -1], vec![0, -1, 1, 0]]);
        assert_eq!(a, b);
        assert_eq!(a, vec![vec![1, 0, 1, -1], vec![0, 1, -1, 0]]);
    }

    #[test]
    fn coordinates_round_trip() {
        let basis = hnf(&[vec![2, 1], vec![0, 3]]);
        let c = coordinates_in(&basis, &[4, 5]).unwrap();
        let back: Vec<i64> = (0..2).map(|j| basis.iter().zip(&c).map(|(r, x)| r[j] * x).sum()).collect();
        assert_eq!(back, vec![4, 5]);
        assert_eq!(coordinates_in(&basis, &[1, 0]), None);
    }

    #[test]
    fn modular_rank_detects_collapse() {
        let m = vec![vec![1, 1], vec![1, -1]];
        assert_eq!(rank_mod_p(&m, 2), 1);
        assert_eq!(rank_mod_p(&m, 3), 2);
        assert_eq!(inverse_mod(3, 7), 5);
    }
}
