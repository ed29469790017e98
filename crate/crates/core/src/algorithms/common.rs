//! Building blocks shared by the run loops: evaluated solutions, the greedy
//! personal-best rule, global-best pool selection, the discrete particle
//! update, and the onlooker / multi-parent pool-improvement phases.

use std::time::Instant;

use crate::core::genome::Genome;
use crate::core::problem::ProblemInstance;
use crate::core::rng::RngStream;
use crate::core::trace::{GenerationRecord, RunResult};
use crate::error::Result;
use crate::operators::{multi_parent_crossover, mutate_one, onlooker_neighbor, single_point_crossover};

/// A genome together with its fitness.
#[derive(Clone, Debug)]
pub struct Evaluated {
    pub genome: Genome,
    pub fitness: f64,
}

/// Greedy personal-best rule: the incumbent wins ties.
pub fn pbest_update(current: Evaluated, previous_pbest: Evaluated) -> Evaluated {
    if current.fitness < previous_pbest.fitness {
        current
    } else {
        previous_pbest
    }
}

/// The `g` lowest-fitness personal bests, sorted non-decreasing, ties broken
/// by lower particle index. Duplicate genomes are permitted.
pub fn select_global_bests(pbests: &[Evaluated], g: usize) -> Vec<Evaluated> {
    debug_assert!(g >= 1 && g <= pbests.len());
    let mut idx: Vec<usize> = (0..pbests.len()).collect();
    idx.sort_by(|&a, &b| pbests[a].fitness.total_cmp(&pbests[b].fitness));
    idx[..g].iter().map(|&i| pbests[i].clone()).collect()
}

/// One uniformly chosen child of a single-point crossover. Length-1 genomes
/// have no interior cut, so the stage degenerates to picking one parent.
fn crossover_pick(a: &Genome, b: &Genome, rng: &mut RngStream) -> Genome {
    if a.len() < 2 {
        return if rng.uniform() < 0.5 { a.clone() } else { b.clone() };
    }
    let (c1, c2) = single_point_crossover(a, b, rng).expect("equal-length genomes");
    if rng.uniform() < 0.5 {
        c1
    } else {
        c2
    }
}

/// Discrete particle update: three probability-gated stages — single-gene
/// mutation (gate `w`), crossover with the personal best (gate `c1`),
/// crossover with the global best (gate `c2`).
#[allow(clippy::too_many_arguments)]
pub fn dpso_particle_update(
    x: &Genome,
    pbest: &Genome,
    gbest: &Genome,
    w: f64,
    c1: f64,
    c2: f64,
    arity: &[u32],
    rng: &mut RngStream,
) -> Genome {
    let lambda = if rng.uniform() < w {
        mutate_one(x, arity, rng).unwrap_or_else(|_| x.clone())
    } else {
        x.clone()
    };
    let delta = if rng.uniform() < c1 {
        crossover_pick(&lambda, pbest, rng)
    } else {
        lambda
    };
    if rng.uniform() < c2 {
        crossover_pick(&delta, gbest, rng)
    } else {
        delta
    }
}

/// Sends `onl` onlookers to each pool member at cycling distances
/// `1..=nbhd_max` and replaces the member by its best onlooker when
/// strictly better.
pub fn onlooker_phase(
    gbests: &mut [Evaluated],
    onl: usize,
    nbhd_max: usize,
    problem: &ProblemInstance,
    rng: &mut RngStream,
    evals: &mut u64,
) {
    let mutable = problem.arity().iter().filter(|&&a| a >= 2).count();
    if mutable == 0 {
        return;
    }
    for gbest in gbests.iter_mut() {
        let mut best: Option<Evaluated> = None;
        for j in 1..=onl {
            let k = ((j - 1) % nbhd_max + 1).min(mutable);
            let genome = onlooker_neighbor(&gbest.genome, k, problem.arity(), rng)
                .expect("distance within mutable positions");
            let fitness = problem.evaluate(&genome, rng);
            *evals += 1;
            if best.as_ref().is_none_or(|b| fitness < b.fitness) {
                best = Some(Evaluated { genome, fitness });
            }
        }
        if let Some(b) = best {
            if b.fitness < gbest.fitness {
                *gbest = b;
            }
        }
    }
}

/// Produces `n_mpc` multi-parent children over the whole pool (fresh
/// permutation each child), then keeps the pool-size best of pool plus
/// children, incumbents winning ties.
pub fn mpc_phase(
    gbests: &mut Vec<Evaluated>,
    n_mpc: usize,
    problem: &ProblemInstance,
    rng: &mut RngStream,
    evals: &mut u64,
) -> Result<()> {
    let e = gbests.len();
    let parents: Vec<Genome> = gbests.iter().map(|g| g.genome.clone()).collect();
    let mut merged = gbests.clone();
    for _ in 0..n_mpc {
        let genome = multi_parent_crossover(&parents, rng)?;
        let fitness = problem.evaluate(&genome, rng);
        *evals += 1;
        merged.push(Evaluated { genome, fitness });
    }
    // stable sort: incumbents precede children, so they win ties
    merged.sort_by(|a, b| a.fitness.total_cmp(&b.fitness));
    merged.truncate(e);
    *gbests = merged;
    Ok(())
}

/// Trace recorder shared by all run loops: tracks the greedy best-so-far,
/// first-attainment generation, and wall time.
pub struct Recorder<'p> {
    problem: &'p ProblemInstance,
    start: Instant,
    records: Vec<GenerationRecord>,
    best: Evaluated,
    itr_best: Option<u32>,
    t_best: Option<f64>,
}

impl<'p> Recorder<'p> {
    pub fn new(problem: &'p ProblemInstance, initial_best: Evaluated) -> Self {
        Self {
            problem,
            start: Instant::now(),
            records: Vec::new(),
            best: initial_best,
            itr_best: None,
            t_best: None,
        }
    }

    /// Greedy acceptance: keeps the candidate only if strictly better.
    pub fn observe(&mut self, candidate: &Evaluated) {
        if candidate.fitness < self.best.fitness {
            self.best = candidate.clone();
        }
    }

    pub fn best(&self) -> &Evaluated {
        &self.best
    }

    /// Appends the record for the next generation.
    pub fn record_generation(&mut self, best_of_generation: f64, population_mean: f64) {
        let generation = self.records.len() as u32 + 1;
        let elapsed = self.start.elapsed().as_secs_f64();
        self.records.push(GenerationRecord {
            generation,
            best_of_generation,
            best_so_far: self.best.fitness,
            population_mean,
            elapsed_since_start: elapsed,
        });
        if self.itr_best.is_none() && self.problem.attained(self.best.fitness) {
            self.itr_best = Some(generation);
            self.t_best = Some(elapsed);
        }
    }

    pub fn finish(self, evaluations: u64) -> RunResult {
        let total_time = self.start.elapsed().as_secs_f64();
        RunResult {
            records: self.records,
            best_fitness: self.best.fitness,
            best_genome: self.best.genome,
            itr_best: self.itr_best,
            t_best: self.t_best,
            total_time,
            evaluations,
        }
    }
}

/// Evaluates an initial random population and returns it with its copy as
/// personal bests.
pub fn init_population(
    problem: &ProblemInstance,
    population: usize,
    rng: &mut RngStream,
    evals: &mut u64,
) -> Vec<Evaluated> {
    (0..population)
        .map(|_| {
            let genome = Genome::random(problem.arity(), rng);
            let fitness = problem.evaluate(&genome, rng);
            *evals += 1;
            Evaluated { genome, fitness }
        })
        .collect()
}

/// Index of the minimum-fitness member (lowest index on ties).
pub fn argmin(pop: &[Evaluated]) -> usize {
    let mut best = 0;
    for (i, e) in pop.iter().enumerate().skip(1) {
        if e.fitness < pop[best].fitness {
            best = i;
        }
    }
    best
}

pub fn population_stats(pop: &[Evaluated]) -> (f64, f64) {
    let bog = pop[argmin(pop)].fitness;
    let mean = pop.iter().map(|e| e.fitness).sum::<f64>() / pop.len() as f64;
    (bog, mean)
}
