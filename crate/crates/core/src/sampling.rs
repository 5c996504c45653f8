//! Deterministic rational sample points.
//!
//! Every randomized check draws its points from here, once, before any
//! evaluation, so a fixed seed reproduces a run exactly.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::polyring::{ratio, Rational};

pub const DEFAULT_SEED: u64 = 20_011_997;
pub const DEFAULT_SAMPLES: usize = 7;
pub const DEFAULT_BOUND: i64 = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleConfig {
    pub count: usize,
    pub seed: u64,
    /// Numerators fall in `[-bound, bound]`, denominators in `[1, bound]`.
    pub bound: i64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        Self {
            count: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
            bound: DEFAULT_BOUND,
        }
    }
}

impl SampleConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    pub fn with_count(self, count: usize) -> Self {
        Self { count, ..self }
    }

    /// `count` points of dimension `dim`.
    pub fn points(&self, dim: usize) -> Vec<Vec<Rational>> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.count)
            .map(|_| (0..dim).map(|_| self.draw(&mut rng, false)).collect())
            .collect()
    }

    /// Like [`points`](Self::points) but no coordinate is zero.
    pub fn nonzero_points(&self, dim: usize) -> Vec<Vec<Rational>> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.count)
            .map(|_| (0..dim).map(|_| self.draw(&mut rng, true)).collect())
            .collect()
    }

    fn draw(&self, rng: &mut ChaCha8Rng, nonzero: bool) -> Rational {
        let b = self.bound.max(1);
        loop {
            let num = rng.random_range(-b..=b);
            let den = rng.random_range(1..=b);
            if !(nonzero && num == 0) {
                return ratio(num, den);
            }
        }
    }
}
