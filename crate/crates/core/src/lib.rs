//! Discrete metaheuristic optimization: a hybrid particle swarm algorithm
//! (OMPCDPSO) with onlooker-bee neighborhood search and multi-parent
//! crossover, plus DPSO, GA, and BA baselines, a grid allocation problem
//! with an exact oracle, binary-encoded analytic benchmarks, convergence
//! metrics, and a reproducible experiment harness.

pub mod algorithms;
pub mod core;
pub mod error;
pub mod harness;
pub mod metrics;
pub mod operators;
pub mod problems;

pub use crate::core::genome::Genome;
pub use crate::core::problem::{random_genome, ProblemInstance};
pub use crate::core::rng::RngStream;
pub use crate::core::trace::{GenerationRecord, RunResult};
pub use crate::error::{Error, Result};
