//! Seeded multi-run campaigns: executes a configured experiment and writes
//! trace, checkpoint-summary, and convergence-curve files.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::core::problem::ProblemInstance;
use crate::core::trace::RunResult;
use crate::error::{Error, Result};
use crate::harness::config::{AlgorithmId, ExperimentConfig};
use crate::metrics::{summarize, SummaryTable};

pub const TRACE_HEADER: &str = "generation,best_of_generation,best_so_far,population_mean,elapsed_s";

/// `(generation, best_of_generation, best_so_far, population_mean, elapsed_s)`.
pub type TraceRow = (u32, f64, f64, f64, f64);
pub const CURVES_HEADER: &str = "generation,avg_best_so_far";

/// Paths and summaries produced by one campaign.
#[derive(Debug)]
pub struct ExperimentArtifacts {
    pub output_dir: PathBuf,
    pub trace_paths: Vec<PathBuf>,
    pub summary_paths: Vec<PathBuf>,
    pub curves_path: PathBuf,
    /// `(checkpoint, summary)` pairs in checkpoint order.
    pub summaries: Vec<(u32, SummaryTable)>,
}

/// Executes run `q` of the campaign with seed `base_seed + q`.
pub fn execute_run(
    algorithm: AlgorithmId,
    problem: &ProblemInstance,
    config: &ExperimentConfig,
    seed: u64,
) -> Result<RunResult> {
    match algorithm {
        AlgorithmId::GA => crate::algorithms::run_ga(problem, &config.ga_params(), seed),
        AlgorithmId::BA => crate::algorithms::run_ba(problem, &config.ba_params(), seed),
        AlgorithmId::DPSO => {
            let p = crate::algorithms::DpsoParams {
                iterations: config.experiment.iterations,
                ..config.ompcdpso_params().base
            };
            crate::algorithms::run_dpso(problem, &p, seed)
        }
        AlgorithmId::OMPCDPSO => {
            crate::algorithms::run_ompcdpso(problem, &config.ompcdpso_params(), seed)
        }
    }
}

fn write_trace(path: &Path, run: &RunResult) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "{TRACE_HEADER}")?;
    for r in &run.records {
        writeln!(
            w,
            "{},{},{},{},{}",
            r.generation, r.best_of_generation, r.best_so_far, r.population_mean,
            r.elapsed_since_start
        )?;
    }
    Ok(())
}

fn write_summary(path: &Path, summary: &SummaryTable) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "{}", SummaryTable::CSV_HEADER)?;
    writeln!(w, "{}", summary.to_csv_row())?;
    Ok(())
}

fn write_curves(path: &Path, runs: &[RunResult]) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "{CURVES_HEADER}")?;
    let g = runs[0].generations();
    for i in 0..g {
        let avg = runs
            .iter()
            .map(|r| r.records[i].best_so_far)
            .sum::<f64>()
            / runs.len() as f64;
        writeln!(w, "{},{}", i + 1, avg)?;
    }
    Ok(())
}

/// Runs the campaign and writes all artifacts under the config's output
/// directory. Runs execute concurrently; each owns its random stream, so
/// results are independent of scheduling.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentArtifacts> {
    config.validate()?;
    let problem = config.problem.build()?;
    let exp = &config.experiment;

    let runs: Vec<RunResult> = (0..exp.runs)
        .into_par_iter()
        .map(|q| execute_run(exp.algorithm, &problem, config, exp.base_seed + q as u64))
        .collect::<Result<Vec<_>>>()?;

    let dir = &exp.output_dir;
    fs::create_dir_all(dir)?;

    let mut trace_paths = Vec::with_capacity(runs.len());
    for (q, run) in runs.iter().enumerate() {
        let path = dir.join(format!("run_{q:03}.csv"));
        write_trace(&path, run)?;
        trace_paths.push(path);
    }

    let mut summary_paths = Vec::new();
    let mut summaries = Vec::new();
    for cp in config.effective_checkpoints() {
        let truncated: Vec<RunResult> = runs
            .iter()
            .map(|r| r.truncated(cp as usize, |f| problem.attained(f)))
            .collect();
        let summary = summarize(&truncated, &problem)?;
        let path = dir.join(format!("summary_{cp}.csv"));
        write_summary(&path, &summary)?;
        summary_paths.push(path);
        summaries.push((cp, summary));
    }

    let curves_path = dir.join("curves.csv");
    if runs[0].generations() > 0 {
        write_curves(&curves_path, &runs)?;
    } else {
        fs::write(&curves_path, format!("{CURVES_HEADER}\n"))?;
    }

    Ok(ExperimentArtifacts {
        output_dir: dir.clone(),
        trace_paths,
        summary_paths,
        curves_path,
        summaries,
    })
}

/// Parses a trace CSV back into its numeric rows; used by the reporting
/// side and the self-consumption checks.
pub fn read_trace(path: &Path) -> Result<Vec<TraceRow>> {
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == TRACE_HEADER => {}
        other => {
            return Err(Error::MalformedFile {
                path: path.display().to_string(),
                reason: format!("bad trace header {other:?}"),
            })
        }
    }
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        let parts: Vec<&str> = line.split(',').collect();
        if parts.len() != 5 {
            return Err(Error::MalformedFile {
                path: path.display().to_string(),
                reason: format!("line {}: expected 5 fields", i + 2),
            });
        }
        let parse_f = |s: &str| -> Result<f64> {
            s.parse().map_err(|_| Error::MalformedFile {
                path: path.display().to_string(),
                reason: format!("line {}: bad number {s:?}", i + 2),
            })
        };
        rows.push((
            parts[0].parse().map_err(|_| Error::MalformedFile {
                path: path.display().to_string(),
                reason: format!("line {}: bad generation", i + 2),
            })?,
            parse_f(parts[1])?,
            parse_f(parts[2])?,
            parse_f(parts[3])?,
            parse_f(parts[4])?,
        ));
    }
    Ok(rows)
}
