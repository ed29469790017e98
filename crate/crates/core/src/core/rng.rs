//! Deterministic randomness for runs and operators.
//!
//! Every run owns exactly one [`RngStream`]. The generator is ChaCha8, an
//! algorithmically defined stream cipher RNG: the same seed produces the
//! same draw sequence on every platform. Platform-default generators are
//! deliberately not used anywhere in the crate.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded, portable random stream. Single-owner: one stream per run.
#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform real in `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        self.rng.gen::<f64>()
    }

    /// Uniform integer in `[a, b]` inclusive.
    pub fn int_in(&mut self, a: i64, b: i64) -> i64 {
        debug_assert!(a <= b);
        self.rng.gen_range(a..=b)
    }

    /// Uniform index in `[0, n)`.
    pub fn index(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        self.rng.gen_range(0..n)
    }

    /// `k` distinct indices sampled uniformly without replacement from `[0, n)`.
    ///
    /// Partial Fisher-Yates; the result order is itself a uniform k-permutation.
    pub fn distinct_indices(&mut self, k: usize, n: usize) -> Vec<usize> {
        debug_assert!(k <= n);
        let mut pool: Vec<usize> = (0..n).collect();
        for i in 0..k {
            let j = self.rng.gen_range(i..n);
            pool.swap(i, j);
        }
        pool.truncate(k);
        pool
    }

    /// In-place uniform shuffle (Fisher-Yates).
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.rng.gen_range(0..=i);
            xs.swap(i, j);
        }
    }
}
