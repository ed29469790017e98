//! Evaluation measures over one or many runs: average best-of-generation,
//! accuracy against known bounds, area under the convergence curve, and the
//! aggregated summary table.

use crate::core::problem::ProblemInstance;
use crate::core::trace::RunResult;
use crate::error::{Error, Result};

/// Flat mean over Q runs of G best-of-generation values each.
pub fn avg_bog(runs: &[Vec<f64>]) -> Result<f64> {
    if runs.is_empty() || runs[0].is_empty() {
        return Err(Error::EmptyInput);
    }
    let g = runs[0].len();
    for r in runs {
        if r.len() != g {
            return Err(Error::RaggedRuns {
                expected: g,
                found: r.len(),
            });
        }
    }
    let total: f64 = runs.iter().flatten().sum();
    Ok(total / (runs.len() * g) as f64)
}

/// Accuracy oriented so the optimum scores 1: `(max_t - f) / (max_t - min_t)`
/// with `f` clamped into the bounds first.
pub fn accuracy(f: f64, min_t: f64, max_t: f64) -> Result<f64> {
    if min_t >= max_t || min_t.is_nan() || max_t.is_nan() {
        return Err(Error::InvalidBounds { min_t, max_t });
    }
    let f = f.clamp(min_t, max_t);
    Ok((max_t - f) / (max_t - min_t))
}

/// The complementary orientation, `(f - min_t) / (max_t - min_t)`: a relative
/// error that is 0 at the optimum. Exposed for completeness; the summary
/// table reports [`accuracy`].
pub fn relative_error(f: f64, min_t: f64, max_t: f64) -> Result<f64> {
    Ok(1.0 - accuracy(f, min_t, max_t)?)
}

/// Area under a best-of-generation curve: raw mode is the plain sum,
/// normalized mode divides by the number of generations.
pub fn area(bog: &[f64], normalized: bool) -> Result<f64> {
    if bog.is_empty() {
        return Err(Error::EmptyInput);
    }
    let raw: f64 = bog.iter().sum();
    Ok(if normalized { raw / bog.len() as f64 } else { raw })
}

/// Aggregate statistics over Q runs of one algorithm on one problem.
#[derive(Clone, Debug)]
pub struct SummaryTable {
    pub best: f64,
    pub avg_best: f64,
    pub std_dev: f64,
    pub avg_bog: f64,
    pub best_acc: Option<f64>,
    pub avg_acc: Option<f64>,
    pub avg_area: f64,
    pub itr_best: Option<u32>,
    pub t_best: Option<f64>,
    pub avg_t_best: Option<f64>,
    pub avg_t_run: f64,
    pub q_runs: usize,
    pub g_generations: usize,
}

pub fn summarize(runs: &[RunResult], problem: &ProblemInstance) -> Result<SummaryTable> {
    if runs.is_empty() {
        return Err(Error::EmptyInput);
    }
    let g = runs[0].generations();
    for r in runs {
        if r.generations() != g {
            return Err(Error::RaggedRuns {
                expected: g,
                found: r.generations(),
            });
        }
    }
    let q = runs.len();
    let bests: Vec<f64> = runs.iter().map(|r| r.best_fitness).collect();
    let best = bests.iter().copied().fold(f64::INFINITY, f64::min);
    let avg_best = bests.iter().sum::<f64>() / q as f64;
    let var = bests.iter().map(|b| (b - avg_best).powi(2)).sum::<f64>() / q as f64;
    let std_dev = var.sqrt();

    let curves: Vec<Vec<f64>> = runs.iter().map(|r| r.bog_curve()).collect();
    let (avg_bog_v, avg_area) = if g == 0 {
        (best, 0.0)
    } else {
        let ab = avg_bog(&curves)?;
        let aa = curves
            .iter()
            .map(|c| area(c, false))
            .collect::<Result<Vec<_>>>()?
            .iter()
            .sum::<f64>()
            / q as f64;
        (ab, aa)
    };

    let (best_acc, avg_acc) = match problem.bounds() {
        Some((lo, hi)) => {
            let per_run: Vec<f64> = bests
                .iter()
                .map(|&b| accuracy(b, lo, hi))
                .collect::<Result<Vec<_>>>()?;
            (
                Some(accuracy(best, lo, hi)?),
                Some(per_run.iter().sum::<f64>() / q as f64),
            )
        }
        None => (None, None),
    };

    // the single best run's attainment stats, plus the mean over all
    // attaining runs
    let best_run = runs
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.best_fitness.total_cmp(&b.best_fitness))
        .map(|(i, _)| i)
        .unwrap();
    let itr_best = runs[best_run].itr_best;
    let t_best = runs[best_run].t_best;
    let attained: Vec<f64> = runs.iter().filter_map(|r| r.t_best).collect();
    let avg_t_best = if attained.is_empty() {
        None
    } else {
        Some(attained.iter().sum::<f64>() / attained.len() as f64)
    };
    let avg_t_run = runs.iter().map(|r| r.total_time).sum::<f64>() / q as f64;

    Ok(SummaryTable {
        best,
        avg_best,
        std_dev,
        avg_bog: avg_bog_v,
        best_acc,
        avg_acc,
        avg_area,
        itr_best,
        t_best,
        avg_t_best,
        avg_t_run,
        q_runs: q,
        g_generations: g,
    })
}

fn fmt_opt_f(v: Option<f64>) -> String {
    v.map_or_else(|| "-".into(), |x| format!("{x}"))
}

fn fmt_opt_u(v: Option<u32>) -> String {
    v.map_or_else(|| "-".into(), |x| format!("{x}"))
}

impl SummaryTable {
    pub const CSV_HEADER: &'static str =
        "Best,AvgBest,StdDev,AvgBOG,BestAcc,AvgAcc,AvgArea,ItrBest,TBest,AvgTBest,AvgTRun,Runs,Generations";

    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.best,
            self.avg_best,
            self.std_dev,
            self.avg_bog,
            fmt_opt_f(self.best_acc),
            fmt_opt_f(self.avg_acc),
            self.avg_area,
            fmt_opt_u(self.itr_best),
            fmt_opt_f(self.t_best),
            fmt_opt_f(self.avg_t_best),
            self.avg_t_run,
            self.q_runs,
            self.g_generations
        )
    }

    /// Human-readable block with one labeled row per statistic.
    pub fn to_text(&self) -> String {
        let rows = [
            ("Best", format!("{}", self.best)),
            ("AvgBest", format!("{}", self.avg_best)),
            ("StdDev", format!("{}", self.std_dev)),
            ("AvgBOG", format!("{}", self.avg_bog)),
            ("BestAcc", fmt_opt_f(self.best_acc)),
            ("AvgAcc", fmt_opt_f(self.avg_acc)),
            ("AvgArea", format!("{}", self.avg_area)),
            ("ItrBest", fmt_opt_u(self.itr_best)),
            ("TBest", fmt_opt_f(self.t_best)),
            ("AvgTBest", fmt_opt_f(self.avg_t_best)),
            ("AvgTRun", format!("{}", self.avg_t_run)),
        ];
        rows.iter()
            .map(|(k, v)| format!("{k:<8} {v}\n"))
            .collect()
    }

    /// Parses a row previously written by [`to_csv_row`].
    pub fn from_csv_row(row: &str) -> Result<Self> {
        let parts: Vec<&str> = row.trim().split(',').collect();
        if parts.len() != 13 {
            return Err(Error::MalformedFile {
                path: "<summary row>".into(),
                reason: format!("expected 13 fields, found {}", parts.len()),
            });
        }
        let f = |s: &str| -> Result<f64> {
            s.parse().map_err(|_| Error::MalformedFile {
                path: "<summary row>".into(),
                reason: format!("bad number {s:?}"),
            })
        };
        let opt_f = |s: &str| -> Result<Option<f64>> {
            if s == "-" {
                Ok(None)
            } else {
                f(s).map(Some)
            }
        };
        Ok(SummaryTable {
            best: f(parts[0])?,
            avg_best: f(parts[1])?,
            std_dev: f(parts[2])?,
            avg_bog: f(parts[3])?,
            best_acc: opt_f(parts[4])?,
            avg_acc: opt_f(parts[5])?,
            avg_area: f(parts[6])?,
            itr_best: if parts[7] == "-" {
                None
            } else {
                Some(parts[7].parse().map_err(|_| Error::MalformedFile {
                    path: "<summary row>".into(),
                    reason: format!("bad integer {:?}", parts[7]),
                })?)
            },
            t_best: opt_f(parts[8])?,
            avg_t_best: opt_f(parts[9])?,
            avg_t_run: f(parts[10])?,
            q_runs: parts[11].parse().unwrap_or(0),
            g_generations: parts[12].parse().unwrap_or(0),
        })
    }
}
