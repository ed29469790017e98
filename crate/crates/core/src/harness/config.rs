//! TOML experiment configuration: problem selection, algorithm choice,
//! campaign shape, and per-algorithm parameter overrides.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algorithms::{BaParams, DpsoParams, GaParams, OmpcdpsoParams};
use crate::core::problem::ProblemInstance;
use crate::error::{Error, Result};
use crate::problems::{
    allocation_problem, benchmark_problem, generate_grid_instance, AllocationInstance,
    BenchmarkId, CenterLayout,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AlgorithmId {
    GA,
    BA,
    DPSO,
    OMPCDPSO,
}

impl AlgorithmId {
    pub const ALL: [AlgorithmId; 4] = [
        AlgorithmId::GA,
        AlgorithmId::BA,
        AlgorithmId::DPSO,
        AlgorithmId::OMPCDPSO,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            AlgorithmId::GA => "GA",
            AlgorithmId::BA => "BA",
            AlgorithmId::DPSO => "DPSO",
            AlgorithmId::OMPCDPSO => "OMPCDPSO",
        }
    }
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlgorithmId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "GA" => Ok(AlgorithmId::GA),
            "BA" => Ok(AlgorithmId::BA),
            "DPSO" => Ok(AlgorithmId::DPSO),
            "OMPCDPSO" => Ok(AlgorithmId::OMPCDPSO),
            _ => Err(Error::UnknownAlgorithm(s.into())),
        }
    }
}

/// The `[problem]` section: either a grid/file-backed allocation instance or
/// a named benchmark function.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum ProblemConfig {
    Allocation {
        #[serde(skip_serializing_if = "Option::is_none")]
        instance: Option<PathBuf>,
        #[serde(skip_serializing_if = "Option::is_none")]
        rows: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        cols: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        spacing: Option<f64>,
    },
    Benchmark {
        id: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        bits_per_dim: Option<usize>,
    },
}

impl ProblemConfig {
    pub fn build(&self) -> Result<ProblemInstance> {
        match self {
            ProblemConfig::Allocation {
                instance,
                rows,
                cols,
                spacing,
            } => {
                let inst = match instance {
                    Some(path) => AllocationInstance::load(path)?,
                    None => {
                        let (r, c) = match (rows, cols) {
                            (Some(r), Some(c)) => (*r, *c),
                            _ => {
                                return Err(Error::Config(
                                    "problem.rows and problem.cols are required when problem.instance is absent"
                                        .into(),
                                ))
                            }
                        };
                        generate_grid_instance(r, c, spacing.unwrap_or(1.0), CenterLayout::Quadrants)?
                    }
                };
                allocation_problem(&inst)
            }
            ProblemConfig::Benchmark { id, bits_per_dim } => {
                let id: BenchmarkId = id.parse()?;
                benchmark_problem(id, bits_per_dim.unwrap_or(20))
            }
        }
    }
}

/// The `[experiment]` section.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentSection {
    pub algorithm: AlgorithmId,
    pub runs: usize,
    pub iterations: u32,
    #[serde(default)]
    pub base_seed: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checkpoints: Vec<u32>,
    pub output_dir: PathBuf,
}

/// The `[params]` section. Field names mirror the conventional parameter
/// labels; anything omitted falls back to the defaults in the params types.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsConfig {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pop: Option<usize>,
    #[serde(rename = "Pc", skip_serializing_if = "Option::is_none")]
    pub pc: Option<f64>,
    #[serde(rename = "Pm", skip_serializing_if = "Option::is_none")]
    pub pm: Option<f64>,
    #[serde(rename = "Elit", skip_serializing_if = "Option::is_none")]
    pub elit: Option<usize>,
    #[serde(rename = "Onl", skip_serializing_if = "Option::is_none")]
    pub onl: Option<usize>,
    #[serde(rename = "Emp", skip_serializing_if = "Option::is_none")]
    pub emp: Option<usize>,
    #[serde(rename = "Sco", skip_serializing_if = "Option::is_none")]
    pub sco: Option<usize>,
    #[serde(rename = "Wmax", skip_serializing_if = "Option::is_none")]
    pub wmax: Option<f64>,
    #[serde(rename = "Wmin", skip_serializing_if = "Option::is_none")]
    pub wmin: Option<f64>,
    #[serde(rename = "C1", skip_serializing_if = "Option::is_none")]
    pub c1: Option<f64>,
    #[serde(rename = "C2", skip_serializing_if = "Option::is_none")]
    pub c2: Option<f64>,
    #[serde(rename = "Gbest", skip_serializing_if = "Option::is_none")]
    pub gbest: Option<usize>,
    #[serde(rename = "NMPC", skip_serializing_if = "Option::is_none")]
    pub nmpc: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub neighborhood_max: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub problem: ProblemConfig,
    pub experiment: ExperimentSection,
    #[serde(default)]
    pub params: ParamsConfig,
}

impl ExperimentConfig {
    pub fn from_toml_str(s: &str) -> Result<Self> {
        let cfg: ExperimentConfig =
            toml::from_str(s).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_toml_string(&self) -> Result<String> {
        toml::to_string_pretty(self).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::MalformedFile {
            path: path.display().to_string(),
            reason: e.to_string(),
        })?;
        Self::from_toml_str(&text).map_err(|e| match e {
            Error::Config(msg) => Error::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn validate(&self) -> Result<()> {
        if self.experiment.runs < 1 {
            return Err(Error::Config("experiment.runs must be >= 1".into()));
        }
        let cps = &self.experiment.checkpoints;
        if !cps.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Config(
                "experiment.checkpoints must be strictly increasing".into(),
            ));
        }
        if cps.iter().any(|&c| c == 0 || c > self.experiment.iterations) {
            return Err(Error::Config(
                "experiment.checkpoints must be in [1, iterations]".into(),
            ));
        }
        self.algorithm_params_check()
    }

    /// Checkpoints to emit summaries at; defaults to the final iteration.
    pub fn effective_checkpoints(&self) -> Vec<u32> {
        if self.experiment.checkpoints.is_empty() {
            vec![self.experiment.iterations]
        } else {
            self.experiment.checkpoints.clone()
        }
    }

    fn dpso_params(&self) -> DpsoParams {
        let d = DpsoParams::default();
        DpsoParams {
            population: self.params.pop.unwrap_or(d.population),
            iterations: self.experiment.iterations,
            w_max: self.params.wmax.unwrap_or(d.w_max),
            w_min: self.params.wmin.unwrap_or(d.w_min),
            c1: self.params.c1.unwrap_or(d.c1),
            c2: self.params.c2.unwrap_or(d.c2),
        }
    }

    pub fn ompcdpso_params(&self) -> OmpcdpsoParams {
        let d = OmpcdpsoParams::default();
        OmpcdpsoParams {
            base: self.dpso_params(),
            g_best_count: self.params.gbest.unwrap_or(d.g_best_count),
            onlookers_per_gbest: self.params.onl.unwrap_or(d.onlookers_per_gbest),
            n_mpc: self.params.nmpc.unwrap_or(d.n_mpc),
            neighborhood_max: self.params.neighborhood_max.unwrap_or(d.neighborhood_max),
        }
    }

    pub fn ga_params(&self) -> GaParams {
        let d = GaParams::default();
        GaParams {
            population: self.params.pop.unwrap_or(d.population),
            iterations: self.experiment.iterations,
            pc: self.params.pc.unwrap_or(d.pc),
            pm: self.params.pm.unwrap_or(d.pm),
            elite_count: self.params.elit.unwrap_or(d.elite_count),
        }
    }

    pub fn ba_params(&self) -> BaParams {
        let d = BaParams::default();
        BaParams {
            population: self.params.pop.unwrap_or(d.population),
            iterations: self.experiment.iterations,
            employed: self.params.emp.unwrap_or(d.employed),
            onlookers: self.params.onl.unwrap_or(d.onlookers),
            scouts: self.params.sco.unwrap_or(d.scouts),
            neighborhood_max: self.params.neighborhood_max.unwrap_or(d.neighborhood_max),
        }
    }

    fn algorithm_params_check(&self) -> Result<()> {
        let map = |e: Error| match e {
            Error::InvalidParams(msg) => Error::Config(format!("params: {msg}")),
            other => other,
        };
        match self.experiment.algorithm {
            AlgorithmId::GA => self.ga_params().validate().map_err(map),
            AlgorithmId::BA => self.ba_params().validate().map_err(map),
            AlgorithmId::DPSO => self.dpso_params().validate().map_err(map),
            AlgorithmId::OMPCDPSO => self.ompcdpso_params().validate().map_err(map),
        }
    }
}
