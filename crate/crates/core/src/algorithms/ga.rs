//! Generational genetic algorithm baseline: rank roulette selection,
//! single-point crossover, single-gene mutation, elitism.

use crate::algorithms::common::{argmin, population_stats, Evaluated, Recorder};
use crate::algorithms::params::GaParams;
use crate::core::genome::Genome;
use crate::core::problem::ProblemInstance;
use crate::core::rng::RngStream;
use crate::core::trace::RunResult;
use crate::error::Result;
use crate::operators::{mutate_one, single_point_crossover};

/// Fitness-rank roulette over indices sorted best-first: rank r gets weight
/// pop - r, so the best member is pop times likelier than the worst.
fn roulette(sorted: &[usize], rng: &mut RngStream) -> usize {
    let n = sorted.len() as u64;
    let total = n * (n + 1) / 2;
    let mut threshold = rng.uniform() * total as f64;
    for (r, &idx) in sorted.iter().enumerate() {
        let weight = (n - r as u64) as f64;
        if threshold < weight {
            return idx;
        }
        threshold -= weight;
    }
    *sorted.last().unwrap()
}

pub fn run_ga(problem: &ProblemInstance, params: &GaParams, seed: u64) -> Result<RunResult> {
    params.validate()?;
    let mut rng = RngStream::new(seed);
    let mut evals = 0u64;

    let mut population =
        crate::algorithms::common::init_population(problem, params.population, &mut rng, &mut evals);
    let mut recorder = Recorder::new(problem, population[argmin(&population)].clone());

    for _ in 0..params.iterations {
        let mut sorted: Vec<usize> = (0..population.len()).collect();
        sorted.sort_by(|&a, &b| population[a].fitness.total_cmp(&population[b].fitness));

        let elites: Vec<Evaluated> = sorted[..params.elite_count]
            .iter()
            .map(|&i| population[i].clone())
            .collect();
        let n_children = params.population - params.elite_count;
        let mut offspring: Vec<Genome> = Vec::with_capacity(n_children);
        while offspring.len() < n_children {
            let p1 = &population[roulette(&sorted, &mut rng)].genome;
            let p2 = &population[roulette(&sorted, &mut rng)].genome;
            let (c1, c2) = if rng.uniform() < params.pc && p1.len() >= 2 {
                single_point_crossover(p1, p2, &mut rng)?
            } else {
                (p1.clone(), p2.clone())
            };
            offspring.push(c1);
            if offspring.len() < n_children {
                offspring.push(c2);
            }
        }
        let mut next = elites;
        for mut child in offspring {
            if rng.uniform() < params.pm {
                if let Ok(m) = mutate_one(&child, problem.arity(), &mut rng) {
                    child = m;
                }
            }
            let fitness = problem.evaluate(&child, &mut rng);
            evals += 1;
            next.push(Evaluated {
                genome: child,
                fitness,
            });
        }
        population = next;
        recorder.observe(&population[argmin(&population)]);
        let (bog, mean) = population_stats(&population);
        recorder.record_generation(bog, mean);
    }
    Ok(recorder.finish(evals))
}
