//! Parameter sets for the four optimizers. Defaults follow the reference
//! configuration used throughout the experiment suite.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DpsoParams {
    pub population: usize,
    pub iterations: u32,
    pub w_max: f64,
    pub w_min: f64,
    pub c1: f64,
    pub c2: f64,
}

impl Default for DpsoParams {
    fn default() -> Self {
        Self {
            population: 100,
            iterations: 400,
            w_max: 0.9,
            w_min: 0.4,
            c1: 0.5,
            c2: 0.5,
        }
    }
}

impl DpsoParams {
    pub fn validate(&self) -> Result<()> {
        if self.population < 2 {
            return Err(Error::InvalidParams("population must be >= 2".into()));
        }
        if !(0.0 <= self.w_min && self.w_min <= self.w_max && self.w_max <= 1.0) {
            return Err(Error::InvalidParams(
                "inertia weights must satisfy 0 <= w_min <= w_max <= 1".into(),
            ));
        }
        for (name, v) in [("c1", self.c1), ("c2", self.c2)] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::InvalidParams(format!("{name} must be in [0, 1]")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OmpcdpsoParams {
    pub base: DpsoParams,
    pub g_best_count: usize,
    pub onlookers_per_gbest: usize,
    pub n_mpc: usize,
    pub neighborhood_max: usize,
}

impl Default for OmpcdpsoParams {
    fn default() -> Self {
        Self {
            base: DpsoParams::default(),
            g_best_count: 20,
            onlookers_per_gbest: 6,
            n_mpc: 20,
            neighborhood_max: 3,
        }
    }
}

impl OmpcdpsoParams {
    pub fn validate(&self) -> Result<()> {
        self.base.validate()?;
        if self.g_best_count < 1 || self.g_best_count > self.base.population {
            return Err(Error::InvalidParams(
                "g_best_count must be in [1, population]".into(),
            ));
        }
        if self.onlookers_per_gbest < 1 {
            return Err(Error::InvalidParams("onlookers_per_gbest must be >= 1".into()));
        }
        if self.n_mpc < 1 {
            return Err(Error::InvalidParams("n_mpc must be >= 1".into()));
        }
        if self.neighborhood_max < 1 {
            return Err(Error::InvalidParams("neighborhood_max must be >= 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GaParams {
    pub population: usize,
    pub iterations: u32,
    pub pc: f64,
    pub pm: f64,
    pub elite_count: usize,
}

impl Default for GaParams {
    fn default() -> Self {
        Self {
            population: 100,
            iterations: 400,
            pc: 0.8,
            pm: 0.25,
            elite_count: 10,
        }
    }
}

impl GaParams {
    pub fn validate(&self) -> Result<()> {
        if self.population < 2 {
            return Err(Error::InvalidParams("population must be >= 2".into()));
        }
        if self.elite_count >= self.population {
            return Err(Error::InvalidParams(
                "elite_count must be < population".into(),
            ));
        }
        for (name, v) in [("pc", self.pc), ("pm", self.pm)] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::InvalidParams(format!("{name} must be in [0, 1]")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BaParams {
    pub population: usize,
    pub iterations: u32,
    pub employed: usize,
    pub onlookers: usize,
    pub scouts: usize,
    pub neighborhood_max: usize,
}

impl Default for BaParams {
    fn default() -> Self {
        Self {
            population: 100,
            iterations: 400,
            employed: 50,
            onlookers: 6,
            scouts: 50,
            neighborhood_max: 3,
        }
    }
}

impl BaParams {
    pub fn validate(&self) -> Result<()> {
        if self.population < 1 {
            return Err(Error::InvalidParams("population must be >= 1".into()));
        }
        if self.employed + self.scouts > self.population {
            return Err(Error::InvalidParams(
                "employed + scouts must be <= population".into(),
            ));
        }
        if self.onlookers < 1 {
            return Err(Error::InvalidParams("onlookers must be >= 1".into()));
        }
        if self.neighborhood_max < 1 {
            return Err(Error::InvalidParams("neighborhood_max must be >= 1".into()));
        }
        Ok(())
    }
}
