//! Aggregates summary files from multiple campaign directories into one
//! comparison table: Best / Mean / Std / AvgTime per directory.

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::harness::experiment::read_trace;
use crate::metrics::SummaryTable;

/// One directory's contribution to the comparison table, taken from its
/// latest-checkpoint summary.
#[derive(Debug)]
pub struct ReportRow {
    pub label: String,
    pub checkpoint: u32,
    pub best: f64,
    pub mean: f64,
    pub std: f64,
    pub avg_time: f64,
}

fn summary_files(dir: &Path) -> Result<Vec<(u32, PathBuf)>> {
    let mut found = Vec::new();
    for entry in fs::read_dir(dir)? {
        let path = entry?.path();
        let name = match path.file_name().and_then(|n| n.to_str()) {
            Some(n) => n,
            None => continue,
        };
        if let Some(cp) = name
            .strip_prefix("summary_")
            .and_then(|r| r.strip_suffix(".csv"))
        {
            if let Ok(cp) = cp.parse::<u32>() {
                found.push((cp, path));
            }
        }
    }
    found.sort_by_key(|(cp, _)| *cp);
    Ok(found)
}

fn read_summary(path: &Path) -> Result<SummaryTable> {
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == SummaryTable::CSV_HEADER => {}
        other => {
            return Err(Error::MalformedFile {
                path: path.display().to_string(),
                reason: format!("bad summary header {other:?}"),
            })
        }
    }
    let row = lines.next().ok_or_else(|| Error::MalformedFile {
        path: path.display().to_string(),
        reason: "missing summary row".into(),
    })?;
    SummaryTable::from_csv_row(row).map_err(|e| match e {
        Error::MalformedFile { reason, .. } => Error::MalformedFile {
            path: path.display().to_string(),
            reason,
        },
        other => other,
    })
}

/// Reads every CSV a campaign wrote, verifying it parses, and returns the
/// row for the latest checkpoint.
pub fn collect_row(dir: &Path) -> Result<ReportRow> {
    let summaries = summary_files(dir)?;
    let (checkpoint, last) = summaries.last().ok_or_else(|| Error::MalformedFile {
        path: dir.display().to_string(),
        reason: "no summary_*.csv files".into(),
    })?;
    // traces and curves must also re-parse (self-consumption contract)
    for entry in fs::read_dir(dir)? {
        let path = entry?.path();
        let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("");
        if name.starts_with("run_") && name.ends_with(".csv") {
            read_trace(&path)?;
        }
    }
    let s = read_summary(last)?;
    let label = dir
        .file_name()
        .and_then(|n| n.to_str())
        .unwrap_or("?")
        .to_string();
    Ok(ReportRow {
        label,
        checkpoint: *checkpoint,
        best: s.best,
        mean: s.avg_best,
        std: s.std_dev,
        avg_time: s.avg_t_run,
    })
}

pub fn report(dirs: &[PathBuf]) -> Result<Vec<ReportRow>> {
    if dirs.is_empty() {
        return Err(Error::EmptyInput);
    }
    dirs.iter().map(|d| collect_row(d)).collect()
}

/// Renders rows as an aligned text table.
pub fn render(rows: &[ReportRow]) -> String {
    let mut out = String::new();
    let width = rows
        .iter()
        .map(|r| r.label.len())
        .max()
        .unwrap_or(4)
        .max("Label".len());
    out.push_str(&format!(
        "{:<width$}  {:>6}  {:>16}  {:>16}  {:>16}  {:>10}\n",
        "Label", "Iter", "Best", "Mean", "Std", "AvgTime"
    ));
    for r in rows {
        out.push_str(&format!(
            "{:<width$}  {:>6}  {:>16.6}  {:>16.6}  {:>16.6}  {:>10.4}\n",
            r.label, r.checkpoint, r.best, r.mean, r.std, r.avg_time
        ));
    }
    out
}

/// The same table as CSV.
pub fn render_csv(rows: &[ReportRow]) -> String {
    let mut out = String::from("label,checkpoint,best,mean,std,avg_time\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.label, r.checkpoint, r.best, r.mean, r.std, r.avg_time
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::config::ExperimentConfig;
    use crate::harness::experiment::run_experiment;

    fn run_small(dir: &Path, algorithm: &str) -> PathBuf {
        let out = dir.join(algorithm.to_lowercase());
        let toml = format!(
            r#"
[problem]
kind = "allocation"
rows = 4
cols = 4

[experiment]
algorithm = "{algorithm}"
runs = 2
iterations = 15
output_dir = "{}"

[params]
pop = 10
Gbest = 3
Onl = 2
NMPC = 3
Emp = 4
Sco = 2
Elit = 2
"#,
            out.display()
        );
        let cfg = ExperimentConfig::from_toml_str(&toml).unwrap();
        run_experiment(&cfg).unwrap();
        out
    }

    #[test]
    fn report_consumes_own_artifacts() {
        let tmp = tempfile::tempdir().unwrap();
        let dirs: Vec<PathBuf> = ["GA", "BA", "DPSO", "OMPCDPSO"]
            .iter()
            .map(|a| run_small(tmp.path(), a))
            .collect();
        let rows = report(&dirs).unwrap();
        assert_eq!(rows.len(), 4);
        for r in &rows {
            assert_eq!(r.checkpoint, 15);
            assert!(r.best <= r.mean);
            assert!(r.std >= 0.0);
        }
        let text = render(&rows);
        assert!(text.contains("ompcdpso"));
        let csv = render_csv(&rows);
        assert_eq!(csv.lines().count(), 5);
    }

    #[test]
    fn missing_summaries_is_an_error() {
        let tmp = tempfile::tempdir().unwrap();
        assert!(report(&[tmp.path().to_path_buf()]).is_err());
        assert!(report(&[]).is_err());
    }
}
