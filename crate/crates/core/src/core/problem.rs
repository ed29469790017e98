//! Problem abstraction shared by every optimizer.

use crate::core::genome::Genome;
use crate::core::rng::RngStream;
use crate::error::{Error, Result};

type EvalFn = dyn Fn(&Genome, &mut RngStream) -> f64 + Send + Sync;

/// An evaluatable minimization problem over fixed-arity integer genomes.
///
/// `evaluate` is deterministic and side-effect free for every built-in
/// problem except the quartic-with-noise benchmark, which draws its
/// additive noise from the caller's [`RngStream`].
pub struct ProblemInstance {
    name: String,
    arity: Vec<u32>,
    eval: Box<EvalFn>,
    bounds: Option<(f64, f64)>,
    known_best: Option<f64>,
}

impl ProblemInstance {
    pub fn new(
        name: impl Into<String>,
        arity: Vec<u32>,
        eval: Box<EvalFn>,
        bounds: Option<(f64, f64)>,
        known_best: Option<f64>,
    ) -> Result<Self> {
        if arity.is_empty() || arity.iter().any(|&a| a < 1) {
            return Err(Error::InvalidParams(
                "dimension must be >= 1 with all arities >= 1".into(),
            ));
        }
        if let Some((min_t, max_t)) = bounds {
            if min_t >= max_t || min_t.is_nan() || max_t.is_nan() {
                return Err(Error::InvalidBounds { min_t, max_t });
            }
        }
        Ok(Self {
            name: name.into(),
            arity,
            eval,
            bounds,
            known_best,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dimension(&self) -> usize {
        self.arity.len()
    }

    pub fn arity(&self) -> &[u32] {
        &self.arity
    }

    /// `(min_t, max_t)` thresholds for accuracy, when known.
    pub fn bounds(&self) -> Option<(f64, f64)> {
        self.bounds
    }

    pub fn known_best(&self) -> Option<f64> {
        self.known_best
    }

    pub fn evaluate(&self, g: &Genome, rng: &mut RngStream) -> f64 {
        debug_assert_eq!(g.len(), self.dimension());
        (self.eval)(g, rng)
    }

    /// Whether a fitness value counts as having attained the known best.
    ///
    /// Tolerance: `|f - known_best| <= 1e-9 * max(1, |known_best|)`.
    pub fn attained(&self, f: f64) -> bool {
        match self.known_best {
            Some(kb) => (f - kb).abs() <= 1e-9 * kb.abs().max(1.0),
            None => false,
        }
    }
}

impl std::fmt::Debug for ProblemInstance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ProblemInstance")
            .field("name", &self.name)
            .field("dimension", &self.dimension())
            .field("bounds", &self.bounds)
            .field("known_best", &self.known_best)
            .finish_non_exhaustive()
    }
}

/// Uniform random genome for a problem (initial positions).
pub fn random_genome(problem: &ProblemInstance, rng: &mut RngStream) -> Genome {
    Genome::random(problem.arity(), rng)
}
