use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::Arrangement;
use crate::error::Result;
use crate::lattice;
use crate::subset::subsets_of_size;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub is_central: bool,
    pub is_simple: bool,
    pub is_unimodular: bool,
    pub is_coloop_free: bool,
    pub kernel_torus_connected: bool,
}

impl Arrangement {
    pub fn classify(&self) -> Classification {
        let minors = self.maximal_minors();
        let is_unimodular = minors.iter().all(|m| m.is_zero() || m.abs().is_one());
        let gcd = minors.iter().fold(BigInt::zero(), |g, m| g.gcd(m));
        Classification {
            is_central: self.is_central(),
            is_simple: self.is_simple(),
            is_unimodular,
            is_coloop_free: self.is_coloop_free(),
            kernel_torus_connected: gcd.is_one(),
        }
    }

    /// Every nonempty intersection is transverse. A dependent subset with a
    /// common point contains a circuit with a common point, and a circuit's
    /// equations are consistent iff its dependency kills the offsets.
    pub fn is_simple(&self) -> bool {
        self.circuits().iter().all(|c| c.signs.iter().zip(&self.offsets).map(|(l, r)| l * r).sum::<i64>() != 0)
    }

    fn maximal_minors(&self) -> Vec<BigInt> {
        if self.dim == 0 {
            return vec![BigInt::one()];
        }
        subsets_of_size(self.n(), self.dim).map(|s| lattice::determinant(&self.columns_of(s))).collect()
    }

    /// Same normals, offsets drawn from `seed` until the arrangement is simple.
    pub fn generic_offsets(&self, seed: u64) -> Result<Arrangement> {
        self.require_central()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut range = (2 * self.n() as i64).max(4);
        loop {
            for _ in 0..64 {
                let offsets = (0..self.n()).map(|_| rng.gen_range(-range..=range)).collect();
                let candidate = self.with_offsets(offsets)?;
                if candidate.is_simple() {
                    return Ok(candidate);
                }
            }
            range *= 2;
        }
    }
}
