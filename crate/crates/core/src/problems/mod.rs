//! Concrete problem instances: grid allocation with an exact oracle, the
//! analytic benchmark suites, and the binary codec that lets discrete
//! algorithms optimize continuous functions.

pub mod allocation;
pub mod benchmarks;
pub mod codec;

pub use allocation::{generate_grid_instance, AllocationInstance, CenterLayout};
pub use benchmarks::{BenchmarkId, BenchmarkSpec};
pub use codec::BinaryCodec;

use crate::core::problem::ProblemInstance;
use crate::error::Result;

/// Wraps an allocation instance as a [`ProblemInstance`]: dimension `M`,
/// uniform arity `N`, bounds `(oracle fitness, worst fitness)` and the
/// oracle fitness as the known best.
pub fn allocation_problem(instance: &AllocationInstance) -> Result<ProblemInstance> {
    let m = instance.n_demands();
    let n = instance.n_centers() as u32;
    let (_, best) = instance.oracle();
    let worst = instance.worst();
    let owned = instance.clone();
    let bounds = if best < worst { Some((best, worst)) } else { None };
    ProblemInstance::new(
        format!("alloc-{}x{}", m, n),
        vec![n; m],
        Box::new(move |g, _| owned.fitness(g)),
        bounds,
        Some(best),
    )
}

/// Wraps a benchmark function as a binary-encoded [`ProblemInstance`]:
/// dimension `B * n_dims`, arity 2 everywhere, fitness = eval after decode.
pub fn benchmark_problem(id: BenchmarkId, bits_per_dim: usize) -> Result<ProblemInstance> {
    let spec = BenchmarkSpec::of(id);
    let codec = BinaryCodec::new(bits_per_dim, spec.lower.clone(), spec.upper.clone())?;
    let arity = vec![2u32; codec.genome_len()];
    let known_best = spec.known_best;
    ProblemInstance::new(
        id.as_str(),
        arity,
        Box::new(move |g, rng| {
            let x = codec.decode(g).expect("binary genome");
            spec.eval(&x, rng)
        }),
        None,
        known_best,
    )
}
