//! Per-generation trace records and per-run results.

use crate::core::genome::Genome;

/// One row of a run's convergence trace.
#[derive(Clone, Debug, PartialEq)]
pub struct GenerationRecord {
    /// 1-based generation counter.
    pub generation: u32,
    /// Minimum fitness in the population at this generation (BOG).
    pub best_of_generation: f64,
    /// Best fitness seen so far in the run; non-increasing.
    pub best_so_far: f64,
    /// Mean population fitness at this generation.
    pub population_mean: f64,
    /// Wall-clock seconds since run start.
    pub elapsed_since_start: f64,
}

/// Outcome of one seeded run.
#[derive(Clone, Debug)]
pub struct RunResult {
    pub records: Vec<GenerationRecord>,
    pub best_genome: Genome,
    pub best_fitness: f64,
    /// First generation at which the known best was attained, if ever.
    pub itr_best: Option<u32>,
    /// Elapsed seconds at that generation.
    pub t_best: Option<f64>,
    /// Total wall-clock seconds of the run loop.
    pub total_time: f64,
    /// Total number of fitness evaluations performed.
    pub evaluations: u64,
}

impl RunResult {
    /// Best-of-generation curve, one value per generation.
    pub fn bog_curve(&self) -> Vec<f64> {
        self.records.iter().map(|r| r.best_of_generation).collect()
    }

    pub fn generations(&self) -> usize {
        self.records.len()
    }

    /// Prefix of the run up to `generations` records, with derived fields
    /// recomputed over the truncated trace. Checkpoint summaries are built
    /// from these truncations of the same runs.
    pub fn truncated(&self, generations: usize, attained_tol: impl Fn(f64) -> bool) -> RunResult {
        let n = generations.min(self.records.len());
        let records: Vec<GenerationRecord> = self.records[..n].to_vec();
        let best_fitness = records
            .last()
            .map(|r| r.best_so_far)
            .unwrap_or(self.best_fitness);
        let (itr_best, t_best) = match (self.itr_best, self.t_best) {
            (Some(g), t) if (g as usize) <= n && attained_tol(best_fitness) => (Some(g), t),
            _ => (None, None),
        };
        let total_time = records.last().map(|r| r.elapsed_since_start).unwrap_or(0.0);
        RunResult {
            records,
            best_genome: self.best_genome.clone(),
            best_fitness,
            itr_best,
            t_best,
            total_time,
            evaluations: self.evaluations,
        }
    }
}
