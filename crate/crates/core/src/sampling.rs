//! Reproducible random rationals for pointwise identity checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalars::{BigRational, OmegaRatFunc};

/// Largest absolute numerator and denominator drawn.
pub const SAMPLE_BOUND: i64 = 50;

/// Seeded stream of rationals `p/q` with `|p|, |q| ≤ 50`.
#[derive(Clone, Debug)]
pub struct RationalSampler {
    rng: ChaCha8Rng,
}

impl RationalSampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn next_rational(&mut self) -> BigRational {
        let p = self.rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND);
        let q = self.rng.gen_range(1..=SAMPLE_BOUND);
        BigRational::new(p.into(), q.into())
    }

    /// Draws until `ok` accepts; singular points are skipped, not reported.
    pub fn next_where(&mut self, mut ok: impl FnMut(&BigRational) -> bool) -> BigRational {
        loop {
            let q = self.next_rational();
            if ok(&q) {
                return q;
            }
        }
    }

    /// A nonzero rational as a constant rational function.
    pub fn next_nonzero(&mut self) -> OmegaRatFunc {
        OmegaRatFunc::constant(self.next_where(|q| *q != BigRational::from_integer(0.into())))
    }

    /// Uniform integer in `lo..=hi`.
    pub fn next_int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn reproducible_and_bounded() {
        let mut a = RationalSampler::new(7);
        let mut b = RationalSampler::new(7);
        for _ in 0..200 {
            let x = a.next_rational();
            assert_eq!(x, b.next_rational());
            assert!(x.numer().abs() <= SAMPLE_BOUND.into());
            assert!(x.denom().abs() <= SAMPLE_BOUND.into());
        }
    }
}
