//! Seeded exact sampling of rationals and r-matrices.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bialgebra::{r_from_coords, r_positions, RMatrix};
use crate::scalar::Scalar;
use crate::superkernel::SuperAlgebra;
use crate::Rational;

/// Largest numerator and denominator drawn.
pub const SAMPLE_BOUND: i64 = 97;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// `±p/q` with `p, q` uniform in `1..=97` and a uniform sign. Never zero.
    pub fn rational(&mut self) -> Rational {
        let p = self.rng.gen_range(1..=SAMPLE_BOUND);
        let q = self.rng.gen_range(1..=SAMPLE_BOUND);
        let sign = if self.rng.gen_bool(0.5) { 1 } else { -1 };
        Rational::from_ratio(sign * p, q)
    }

    pub fn bit(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}

/// Number of distinct values [`Sampler::rational`] can produce; the set size in the
/// Schwartz-Zippel bound `deg / |S|` for a single sample.
pub fn sample_space_size() -> usize {
    let mut seen = BTreeSet::new();
    for p in 1..=SAMPLE_BOUND {
        for q in 1..=SAMPLE_BOUND {
            seen.insert(Rational::from_ratio(p, q));
        }
    }
    2 * seen.len()
}

/// Even graded-antisymmetric r with every independent entry drawn from the sampler.
pub fn random_rmatrix(alg: &SuperAlgebra<Rational>, s: &mut Sampler) -> RMatrix<Rational> {
    let coords: Vec<Rational> = r_positions(alg).iter().map(|_| s.rational()).collect();
    r_from_coords(alg, &coords).expect("coordinate count matches positions")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{Signed, Zero};

    #[test]
    fn deterministic_and_in_range() {
        let mut a = Sampler::new(42);
        let mut b = Sampler::new(42);
        for _ in 0..200 {
            let x = a.rational();
            assert_eq!(x, b.rational());
            assert!(!x.is_zero());
            assert!(x.numer().abs() <= SAMPLE_BOUND.into());
            assert!(x.denom() <= &SAMPLE_BOUND.into());
        }
    }

    #[test]
    fn space_size_is_even_and_large() {
        let n = sample_space_size();
        assert_eq!(n % 2, 0);
        assert!(n > 5000);
    }
}
