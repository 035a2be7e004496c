//! Tutte polynomial by memoized deletion-contraction, and the corank-nullity
//! expansion as an independent check.

use std::collections::HashMap;
use std::sync::RwLock;

use num_integer::Integer;
use rayon::prelude::*;

use crate::arrangement::Arrangement;
use crate::lattice;
use crate::poly::{BiPoly, UniPoly};
use crate::subset::Subset;

/// Below this many columns both branches run on the calling thread.
const PARALLEL_THRESHOLD: usize = 9;

/// Tutte polynomials of column configurations, keyed by a canonical form that
/// identifies configurations differing by column order, column scaling and a
/// unimodular change of basis. Safe to share between threads.
#[derive(Default)]
pub struct TutteCache {
    memo: RwLock<HashMap<Vec<i64>, BiPoly>>,
}

impl TutteCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn get(&self, key: &[i64]) -> Option<BiPoly> {
        self.memo.read().unwrap().get(key).cloned()
    }

    fn insert(&self, key: Vec<i64>, value: BiPoly) {
        self.memo.write().unwrap().insert(key, value);
    }
}

/// Tutte polynomial of the matroid of the normals.
pub fn tutte(a: &Arrangement) -> BiPoly {
    tutte_with(a, &TutteCache::new())
}

/// [`tutte`] with a caller-owned memo table, reused across calls.
pub fn tutte_with(a: &Arrangement, cache: &TutteCache) -> BiPoly {
    tutte_columns(a.dim(), a.columns().to_vec(), cache)
}

fn tutte_columns(dim: usize, columns: Vec<Vec<i64>>, cache: &TutteCache) -> BiPoly {
    let (loops, rest): (Vec<_>, Vec<_>) = columns.into_iter().partition(|c| c.iter().all(|&x| x == 0));
    let body = if rest.is_empty() {
        BiPoly::one()
    } else {
        let (key, canonical) = canonical_form(dim, rest);
        match cache.get(&key) {
            Some(t) => t,
            None => {
                let t = delete_contract(dim, canonical, cache);
                cache.insert(key, t.clone());
                t
            }
        }
    };
    if loops.is_empty() {
        body
    } else {
        &body * &BiPoly::from_terms([((0, loops.len() as u32), 1)])
    }
}

fn delete_contract(dim: usize, mut columns: Vec<Vec<i64>>, cache: &TutteCache) -> BiPoly {
    let e = columns.pop().expect("nonempty configuration");
    let is_coloop = columns.is_empty() || lattice::rank(&columns) < dim;
    let projection = lattice::integer_kernel(&[e], dim);
    let contracted: Vec<Vec<i64>> = columns.iter().map(|c| lattice::mat_vec(&projection, c)).collect();
    if is_coloop {
        return &BiPoly::x() * &tutte_columns(dim - 1, contracted, cache);
    }
    let (deleted, contracted) = if columns.len() >= PARALLEL_THRESHOLD {
        rayon::join(|| tutte_columns(dim, columns, cache), || tutte_columns(dim - 1, contracted, cache))
    } else {
        (tutte_columns(dim, columns, cache), tutte_columns(dim - 1, contracted, cache))
    };
    &deleted + &contracted
}

/// Primitive, sign-normalized, sorted columns brought to Hermite form, twice.
fn canonical_form(dim: usize, columns: Vec<Vec<i64>>) -> (Vec<i64>, Vec<Vec<i64>>) {
    let mut cols: Vec<Vec<i64>> = columns.into_iter().map(normalize).collect();
    for _ in 0..2 {
        cols.sort();
        let rows: Vec<Vec<i64>> = (0..dim).map(|j| cols.iter().map(|c| c[j]).collect()).collect();
        let h = lattice::hnf(&rows);
        cols = (0..cols.len()).map(|i| normalize(h.iter().map(|r| r[i]).collect())).collect();
    }
    cols.sort();
    let mut key = vec![dim as i64, cols.len() as i64];
    key.extend(cols.iter().flatten());
    (key, cols)
}

fn normalize(mut c: Vec<i64>) -> Vec<i64> {
    let g = c.iter().fold(0i64, |g, &x| g.gcd(&x));
    let sign = c.iter().find(|&&x| x != 0).map_or(1, |&x| x.signum());
    c.iter_mut().for_each(|x| *x /= g * sign);
    c
}

/// `sum_S (x-1)^(r(E)-r(S)) (y-1)^(|S|-r(S))` over all `2^n` subsets.
pub fn tutte_whitney(a: &Arrangement) -> BiPoly {
    let r = a.dim();
    let counts: HashMap<(usize, usize), i64> = (0..1u32 << a.n())
        .into_par_iter()
        .fold(HashMap::new, |mut acc, bits| {
            let s = Subset::from_bits(bits);
            let rs = a.rank(s);
            *acc.entry((r - rs, s.len() - rs)).or_insert(0) += 1;
            acc
        })
        .reduce(HashMap::new, |mut x, y| {
            for (k, v) in y {
                *x.entry(k).or_insert(0) += v;
            }
            x
        });
    let mut keys: Vec<_> = counts.keys().copied().collect();
    keys.sort();
    let x_minus_1 = UniPoly::new(&[-1, 1]);
    keys.into_iter().map(|(i, j)| BiPoly::outer(&x_minus_1.pow(i), &x_minus_1.pow(j)).scale(counts[&(i, j)])).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn t(terms: &[((u32, u32), i64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn deletion_contraction_examples() {
        assert_eq!(tutte(&fixtures::b2()), t(&[((2, 0), 1)]));
        assert_eq!(tutte(&fixtures::k3()), t(&[((2, 0), 1), ((1, 0), 1), ((0, 1), 1)]));
        assert_eq!(tutte(&fixtures::rep4()), t(&[((2, 0), 1), ((1, 0), 1), ((1, 1), 1), ((0, 1), 1), ((0, 2), 1)]));
    }

    #[test]
    fn whitney_examples() {
        assert_eq!(tutte_whitney(&fixtures::k3()), t(&[((2, 0), 1), ((1, 0), 1), ((0, 1), 1)]));
        assert_eq!(tutte_whitney(&fixtures::b2()), t(&[((2, 0), 1)]));
        let k4 = t(&[((3, 0), 1), ((2, 0), 3), ((1, 0), 2), ((1, 1), 4), ((0, 1), 2), ((0, 2), 3), ((0, 3), 1)]);
        assert_eq!(tutte_whitney(&fixtures::k4()), k4);
        assert_eq!(tutte(&fixtures::k4()), k4);
    }

    #[test]
    fn canonical_form_ignores_order_scaling_and_basis() {
        let a = vec![vec![1, 0], vec![0, 1], vec![1, 1]];
        let b = vec![vec![-2, -2], vec![1, 1], vec![1, 0]];
        let c = vec![vec![1, 2], vec![0, 3], vec![1, -1]];
        assert_eq!(canonical_form(2, a.clone()).0, canonical_form(2, a.iter().rev().cloned().collect()).0);
        assert_ne!(canonical_form(2, a.clone()).0, canonical_form(2, b).0);
        // Same matroid, different lattice: keys may differ, polynomials may not.
        let cache = TutteCache::new();
        assert_eq!(tutte_columns(2, a, &cache), tutte_columns(2, c, &cache));
    }

    #[test]
    fn cache_is_reused() {
        let cache = TutteCache::new();
        let first = tutte_with(&fixtures::k4(), &cache);
        let size = cache.len();
        assert_eq!(tutte_with(&fixtures::k4(), &cache), first);
        assert_eq!(cache.len(), size);
    }
}
