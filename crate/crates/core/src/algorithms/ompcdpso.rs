//! The hybrid run loop: discrete PSO with an onlooker-bee neighborhood
//! search and multi-parent crossover applied to a pool of global bests.

use crate::algorithms::common::{
    argmin, dpso_particle_update, init_population, mpc_phase, onlooker_phase, pbest_update,
    population_stats, select_global_bests, Evaluated, Recorder,
};
use crate::algorithms::params::OmpcdpsoParams;
use crate::core::problem::ProblemInstance;
use crate::core::rng::RngStream;
use crate::core::trace::RunResult;
use crate::error::Result;
use crate::operators::inertia;

pub fn run_ompcdpso(
    problem: &ProblemInstance,
    params: &OmpcdpsoParams,
    seed: u64,
) -> Result<RunResult> {
    params.validate()?;
    let base = &params.base;
    let mut rng = RngStream::new(seed);
    let mut evals = 0u64;

    let mut particles = init_population(problem, base.population, &mut rng, &mut evals);
    let mut pbests = particles.clone();
    let mut recorder = Recorder::new(problem, pbests[argmin(&pbests)].clone());

    for t in 0..base.iterations {
        // refine a pool of the best personal bests, then steer every
        // particle toward the single tracked global best
        let mut gbests = select_global_bests(&pbests, params.g_best_count);
        onlooker_phase(
            &mut gbests,
            params.onlookers_per_gbest,
            params.neighborhood_max,
            problem,
            &mut rng,
            &mut evals,
        );
        mpc_phase(&mut gbests, params.n_mpc, problem, &mut rng, &mut evals)?;
        recorder.observe(&gbests[argmin(&gbests)]);
        let gbest_genome = recorder.best().genome.clone();

        let w = inertia(t, base.iterations, base.w_max, base.w_min)?;
        for i in 0..particles.len() {
            let genome = dpso_particle_update(
                &particles[i].genome,
                &pbests[i].genome,
                &gbest_genome,
                w,
                base.c1,
                base.c2,
                problem.arity(),
                &mut rng,
            );
            let fitness = problem.evaluate(&genome, &mut rng);
            evals += 1;
            particles[i] = Evaluated { genome, fitness };
            pbests[i] = pbest_update(particles[i].clone(), pbests[i].clone());
        }
        recorder.observe(&pbests[argmin(&pbests)]);
        let (bog, mean) = population_stats(&particles);
        recorder.record_generation(bog, mean);
    }
    Ok(recorder.finish(evals))
}
