//! Configuration-driven experiment runner: config parsing, seeded campaign
//! execution, and cross-campaign reporting.

pub mod config;
pub mod experiment;
pub mod report;

pub use config::{AlgorithmId, ExperimentConfig, ParamsConfig, ProblemConfig};
pub use experiment::{run_experiment, ExperimentArtifacts};
pub use report::{collect_row, render, render_csv, report, ReportRow};
