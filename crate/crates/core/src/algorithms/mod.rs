//! The four optimizers as deterministic, seedable run loops.

pub mod ba;
pub mod common;
pub mod dpso;
pub mod ga;
pub mod ompcdpso;
pub mod params;

pub use ba::run_ba;
pub use common::{
    dpso_particle_update, mpc_phase, onlooker_phase, pbest_update, select_global_bests, Evaluated,
};
pub use dpso::run_dpso;
pub use ga::run_ga;
pub use ompcdpso::run_ompcdpso;
pub use params::{BaParams, DpsoParams, GaParams, OmpcdpsoParams};
