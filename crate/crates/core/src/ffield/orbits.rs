//! Closedness of torus orbits on `T^* A^n` via exact linear programming.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Whether the orbit of `(z, w)` under the torus with weight matrix `b`
/// (`k x n`, weight of coordinate `i` is column `i`) is closed.
///
/// The orbit is closed iff the weights of the nonzero coordinates, `+b_i` for
/// `z_i != 0` and `-b_i` for `w_i != 0`, admit a dependency with every
/// coefficient strictly positive. No weights means a fixed point.
pub fn orbit_is_closed(b: &[Vec<i64>], z: &[u64], w: &[u64]) -> bool {
    let mut weights: Vec<Vec<i64>> = Vec::new();
    for i in 0..z.len() {
        let column = b.iter().map(|row| row[i]);
        if z[i] != 0 {
            weights.push(column.clone().collect());
        }
        if w[i] != 0 {
            weights.push(column.map(|x| -x).collect());
        }
    }
    positive_dependency(&weights, b.len())
}

/// Is there `c > 0` with `sum_j c_j v_j = 0`? Equivalently `c = 1 + s` with
/// `s >= 0` and `V s = -V 1`.
pub(crate) fn positive_dependency(vectors: &[Vec<i64>], dim: usize) -> bool {
    if vectors.is_empty() {
        return true;
    }
    let rat = |x: i64| BigRational::from_integer(BigInt::from(x));
    let a: Vec<Vec<BigRational>> = (0..dim).map(|r| vectors.iter().map(|v| rat(v[r])).collect()).collect();
    let rhs: Vec<BigRational> = (0..dim).map(|r| rat(-vectors.iter().map(|v| v[r]).sum::<i64>())).collect();
    feasible(a, rhs)
}

/// Whether `{x >= 0 : A x = b}` is nonempty: phase one of the simplex method
/// with Bland's rule.
pub(crate) fn feasible(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> bool {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    for (row, rhs) in a.iter_mut().zip(b.iter_mut()) {
        if rhs.is_negative() {
            row.iter_mut().for_each(|x| *x = -x.clone());
            *rhs = -rhs.clone();
        }
    }
    // Columns n..n+m are artificial; the initial basis consists of them.
    for (i, row) in a.iter_mut().enumerate() {
        row.extend((0..m).map(|j| if i == j { BigRational::from_integer(1.into()) } else { BigRational::zero() }));
    }
    let width = n + m;
    let mut basis: Vec<usize> = (n..width).collect();
    // Reduced costs of the artificial objective.
    let mut cost: Vec<BigRational> = (0..width)
        .map(|j| if j < n { -a.iter().map(|row| &row[j]).sum::<BigRational>() } else { BigRational::zero() })
        .collect();

    while let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if !a[i][enter].is_positive() {
                continue;
            }
            let ratio = &b[i] / &a[i][enter];
            let better = match &leave {
                None => true,
                Some((l, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*l]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // Phase one is bounded below by zero, so some row always leaves.
        let (r, _) = leave.expect("artificial objective is bounded");
        let pivot = a[r][enter].clone();
        a[r].iter_mut().for_each(|x| *x /= &pivot);
        b[r] /= &pivot;
        let pivot_row = a[r].clone();
        for i in 0..m {
            if i == r || a[i][enter].is_zero() {
                continue;
            }
            let factor = a[i][enter].clone();
            for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                *x -= &factor * y;
            }
            let delta = &factor * &b[r];
            b[i] -= delta;
        }
        let factor = cost[enter].clone();
        for j in 0..width {
            let delta = &factor * &a[r][j];
            cost[j] -= delta;
        }
        basis[r] = enter;
    }
    basis.iter().zip(&b).all(|(&j, v)| j < n || v.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closedness_examples() {
        let b = vec![vec![1, 1, -1]];
        assert!(orbit_is_closed(&b, &[1, 1, 1], &[1, 1, 1]));
        assert!(!orbit_is_closed(&b, &[1, 1, 0], &[0, 0, 0]));
        assert!(orbit_is_closed(&b, &[0, 0, 0], &[0, 0, 0]));
        // Weights +1, +1, -1: a positive combination vanishes.
        assert!(orbit_is_closed(&b, &[1, 1, 1], &[0, 0, 0]));
    }

    #[test]
    fn positive_dependency_in_the_plane() {
        assert!(positive_dependency(&[vec![1, 0], vec![0, 1], vec![-1, -1]], 2));
        assert!(!positive_dependency(&[vec![1, 0], vec![0, 1], vec![-1, 0]], 2));
        // A segment through the origin inside a plane: relative interior.
        assert!(positive_dependency(&[vec![1, 1], vec![-2, -2]], 2));
        assert!(positive_dependency(&[vec![0, 0]], 2));
    }

    #[test]
    fn feasibility() {
        let r = |x: i64| BigRational::from_integer(x.into());
        assert!(feasible(vec![vec![r(1), r(1)]], vec![r(3)]));
        assert!(!feasible(vec![vec![r(1), r(1)]], vec![r(-3)]));
        assert!(!feasible(vec![vec![r(1), r(0)], vec![r(1), r(0)]], vec![r(1), r(2)]));
    }
}
