//! The named fixture arrangements and a seeded generator of random central
//! arrangements.

use rand::Rng;

use crate::arrangement::Arrangement;
use crate::lattice;

fn build(dim: usize, columns: &[&[i64]]) -> Arrangement {
    Arrangement::central(dim, columns.iter().map(|c| c.to_vec()).collect()).expect("fixture is valid")
}

/// Boolean arrangement in rank 2.
pub fn b2() -> Arrangement {
    build(2, &[&[1, 0], &[0, 1]])
}

/// Graphic arrangement of the triangle.
pub fn k3() -> Arrangement {
    build(2, &[&[1, 0], &[0, 1], &[1, 1]])
}

/// Four lines in the plane, the second and third coinciding.
pub fn rep4() -> Arrangement {
    build(2, &[&[1, 0], &[0, 1], &[0, 1], &[1, 1]])
}

/// Four distinct lines in the plane; not unimodular.
pub fn nu4() -> Arrangement {
    build(2, &[&[1, 0], &[0, 1], &[1, 1], &[1, -1]])
}

/// Graphic arrangement of the complete graph on four vertices, edges
/// 12, 13, 14, 23, 24, 34, last incidence row dropped.
pub fn k4() -> Arrangement {
    build(3, &[&[1, -1, 0], &[1, 0, -1], &[1, 0, 0], &[0, 1, -1], &[0, 1, 0], &[0, 0, 1]])
}

pub fn catalog() -> Vec<(&'static str, Arrangement)> {
    vec![("b2", b2()), ("k3", k3()), ("rep4", rep4()), ("nu4", nu4()), ("k4", k4())]
}

pub fn by_name(name: &str) -> Option<Arrangement> {
    catalog().into_iter().find(|(n, _)| *n == name).map(|(_, a)| a)
}

/// A central arrangement with `n` nonzero columns of full rank `dim`,
/// entries in `[-bound, bound]`. Requires `n >= dim`.
pub fn random_central<R: Rng>(rng: &mut R, n: usize, dim: usize, bound: i64) -> Arrangement {
    assert!(n >= dim && bound >= 1);
    loop {
        let columns: Vec<Vec<i64>> = (0..n)
            .map(|_| loop {
                let c: Vec<i64> = (0..dim).map(|_| rng.gen_range(-bound..=bound)).collect();
                if c.iter().any(|&x| x != 0) {
                    break c;
                }
            })
            .collect();
        if lattice::rank(&columns) == dim {
            return Arrangement::central(dim, columns).expect("checked rank");
        }
    }
}

/// The seeded family used by the residual suites: `count` central
/// arrangements with `n <= max_n`, `d <= max_d`, entries in `[-3, 3]`.
pub fn random_family(seed: u64, count: usize, max_n: usize, max_d: usize) -> Vec<Arrangement> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=max_d);
            let n = rng.gen_range(d..=max_n);
            random_central(&mut rng, n, d, 3)
        })
        .collect()
}
