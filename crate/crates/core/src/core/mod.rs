//! Solution representation, problem abstraction, deterministic randomness
//! and run traces shared by every optimizer.

pub mod genome;
pub mod problem;
pub mod rng;
pub mod trace;

pub use genome::Genome;
pub use problem::{random_genome, ProblemInstance};
pub use rng::RngStream;
pub use trace::{GenerationRecord, RunResult};
