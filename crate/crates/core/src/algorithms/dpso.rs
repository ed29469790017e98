//! Plain discrete PSO run loop.

use crate::algorithms::common::{
    argmin, dpso_particle_update, init_population, pbest_update, population_stats, Recorder,
};
use crate::algorithms::params::DpsoParams;
use crate::core::problem::ProblemInstance;
use crate::core::rng::RngStream;
use crate::core::trace::RunResult;
use crate::error::Result;
use crate::operators::inertia;

pub fn run_dpso(problem: &ProblemInstance, params: &DpsoParams, seed: u64) -> Result<RunResult> {
    params.validate()?;
    let mut rng = RngStream::new(seed);
    let mut evals = 0u64;

    let mut particles = init_population(problem, params.population, &mut rng, &mut evals);
    let mut pbests = particles.clone();
    let mut gbest = pbests[argmin(&pbests)].clone();
    let mut recorder = Recorder::new(problem, gbest.clone());

    for t in 0..params.iterations {
        let w = inertia(t, params.iterations, params.w_max, params.w_min)?;
        for i in 0..particles.len() {
            let genome = dpso_particle_update(
                &particles[i].genome,
                &pbests[i].genome,
                &gbest.genome,
                w,
                params.c1,
                params.c2,
                problem.arity(),
                &mut rng,
            );
            let fitness = problem.evaluate(&genome, &mut rng);
            evals += 1;
            particles[i] = crate::algorithms::common::Evaluated { genome, fitness };
            pbests[i] = pbest_update(particles[i].clone(), pbests[i].clone());
        }
        gbest = pbests[argmin(&pbests)].clone();
        recorder.observe(&gbest);
        let (bog, mean) = population_stats(&particles);
        recorder.record_generation(bog, mean);
    }
    Ok(recorder.finish(evals))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::{allocation_problem, AllocationInstance};

    fn tiny_problem() -> ProblemInstance {
        // one demand at the origin, four centers: a 4-point search space
        let inst = AllocationInstance::new(
            vec![[1.0, 0.0], [2.0, 0.0], [3.0, 0.0], [0.5, 0.0]],
            vec![[0.0, 0.0]],
        )
        .unwrap();
        allocation_problem(&inst).unwrap()
    }

    #[test]
    fn zero_iterations_returns_best_initial() {
        let p = tiny_problem();
        let params = DpsoParams {
            population: 8,
            iterations: 0,
            ..DpsoParams::default()
        };
        let r = run_dpso(&p, &params, 7).unwrap();
        assert!(r.records.is_empty());
        assert_eq!(r.evaluations, 8);
        assert!(r.best_fitness.is_finite());
    }

    #[test]
    fn same_seed_gives_identical_traces() {
        let p = tiny_problem();
        let params = DpsoParams {
            population: 8,
            iterations: 20,
            ..DpsoParams::default()
        };
        let a = run_dpso(&p, &params, 42).unwrap();
        let b = run_dpso(&p, &params, 42).unwrap();
        assert_eq!(a.best_fitness, b.best_fitness);
        assert_eq!(a.best_genome, b.best_genome);
        for (ra, rb) in a.records.iter().zip(&b.records) {
            assert_eq!(ra.best_of_generation, rb.best_of_generation);
            assert_eq!(ra.best_so_far, rb.best_so_far);
            assert_eq!(ra.population_mean, rb.population_mean);
        }
    }

    #[test]
    fn finds_oracle_on_four_point_space() {
        let p = tiny_problem();
        let params = DpsoParams {
            population: 8,
            iterations: 50,
            ..DpsoParams::default()
        };
        let r = run_dpso(&p, &params, 0).unwrap();
        assert_eq!(r.best_fitness, p.known_best().unwrap());
        assert!(r.itr_best.is_some());
    }

    #[test]
    fn best_so_far_is_monotone() {
        let p = tiny_problem();
        let params = DpsoParams {
            population: 6,
            iterations: 30,
            ..DpsoParams::default()
        };
        let r = run_dpso(&p, &params, 3).unwrap();
        for w in r.records.windows(2) {
            assert!(w[1].best_so_far <= w[0].best_so_far);
        }
    }

    #[test]
    fn evaluation_count_matches_loop() {
        let p = tiny_problem();
        let params = DpsoParams {
            population: 8,
            iterations: 10,
            ..DpsoParams::default()
        };
        let r = run_dpso(&p, &params, 1).unwrap();
        assert_eq!(r.evaluations, 8 + 8 * 10);
    }
}
