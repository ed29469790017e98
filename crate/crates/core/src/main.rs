use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ompcdpso::error::Error;
use ompcdpso::harness::config::{AlgorithmId, ExperimentConfig, ExperimentSection, ProblemConfig};
use ompcdpso::harness::{render, render_csv, report, run_experiment};
use ompcdpso::problems::{generate_grid_instance, BenchmarkId, CenterLayout};

#[derive(Parser)]
#[command(name = "ompcdpso", version, about = "Discrete metaheuristic experiment runner")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an allocation instance file from grid parameters
    GenData(GenDataArgs),
    /// Execute one experiment config file
    Run {
        /// Path to a TOML experiment config
        config: PathBuf,
    },
    /// Execute a named suite across all four algorithms
    Bench(BenchArgs),
    /// Aggregate summaries from campaign directories into one table
    Report {
        /// Campaign output directories
        dirs: Vec<PathBuf>,
        /// Emit CSV instead of an aligned table
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Args)]
struct GenDataArgs {
    #[arg(long)]
    rows: usize,
    #[arg(long)]
    cols: usize,
    #[arg(long, default_value_t = 1.0)]
    spacing: f64,
    /// Place one center at the centroid of each grid quadrant
    #[arg(long)]
    quadrant_centers: bool,
    /// Output instance file
    #[arg(long, short)]
    out: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    /// One of: alloc-small, alloc-large, funcs-2d, funcs-30d
    suite: String,
    #[arg(long, default_value_t = 20)]
    runs: usize,
    #[arg(long, default_value_t = 400)]
    iterations: u32,
    #[arg(long, default_value_t = 0)]
    base_seed: u64,
    #[arg(long, default_value = "bench-out")]
    output: PathBuf,
}

/// Usage and configuration mistakes exit 1; runtime failures exit 2.
fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Config(_)
        | Error::InvalidParams(_)
        | Error::MalformedFile { .. }
        | Error::UnknownAlgorithm(_)
        | Error::UnknownBenchmark(_)
        | Error::DegenerateGrid
        | Error::OddQuadrants { .. }
        | Error::InvalidBounds { .. } => 1,
        _ => 2,
    }
}

fn gen_data(args: &GenDataArgs) -> Result<(), Error> {
    if !args.quadrant_centers {
        return Err(Error::Config(
            "--quadrant-centers is required (the only supported center layout)".into(),
        ));
    }
    let inst = generate_grid_instance(args.rows, args.cols, args.spacing, CenterLayout::Quadrants)?;
    inst.save(&args.out)?;
    println!(
        "wrote {} ({} demands, {} centers)",
        args.out.display(),
        inst.n_demands(),
        inst.n_centers()
    );
    Ok(())
}

fn suite_problems(suite: &str) -> Result<Vec<(String, ProblemConfig)>, Error> {
    let grid = |rows: usize, cols: usize| ProblemConfig::Allocation {
        instance: None,
        rows: Some(rows),
        cols: Some(cols),
        spacing: Some(1.0),
    };
    let funcs = |ids: &[BenchmarkId]| {
        ids.iter()
            .map(|id| {
                (
                    id.as_str().to_lowercase(),
                    ProblemConfig::Benchmark {
                        id: id.as_str().into(),
                        bits_per_dim: Some(20),
                    },
                )
            })
            .collect()
    };
    Ok(match suite {
        "alloc-small" => vec![("alloc-20x20".into(), grid(20, 20))],
        "alloc-large" => vec![("alloc-60x60".into(), grid(60, 60))],
        "funcs-2d" => funcs(&BenchmarkId::TWO_D),
        "funcs-30d" => funcs(&BenchmarkId::THIRTY_D),
        other => {
            return Err(Error::Config(format!(
                "unknown suite {other:?}; expected alloc-small, alloc-large, funcs-2d, or funcs-30d"
            )))
        }
    })
}

fn bench(args: &BenchArgs) -> Result<(), Error> {
    let problems = suite_problems(&args.suite)?;
    for (name, problem) in problems {
        let mut dirs = Vec::new();
        for algorithm in AlgorithmId::ALL {
            let output_dir = args
                .output
                .join(&args.suite)
                .join(&name)
                .join(algorithm.as_str().to_lowercase());
            let config = ExperimentConfig {
                problem: problem.clone(),
                experiment: ExperimentSection {
                    algorithm,
                    runs: args.runs,
                    iterations: args.iterations,
                    base_seed: args.base_seed,
                    checkpoints: Vec::new(),
                    output_dir: output_dir.clone(),
                },
                params: Default::default(),
            };
            eprintln!("bench: {name} / {algorithm} -> {}", output_dir.display());
            run_experiment(&config)?;
            dirs.push(output_dir);
        }
        let rows = report(&dirs)?;
        println!("== {name} ==");
        print!("{}", render(&rows));
    }
    Ok(())
}

fn dispatch(cli: &Cli) -> Result<(), Error> {
    match &cli.command {
        Command::GenData(args) => gen_data(args),
        Command::Run { config } => {
            let cfg = ExperimentConfig::load(config)?;
            let artifacts = run_experiment(&cfg)?;
            for (cp, summary) in &artifacts.summaries {
                println!("-- iteration {cp} --");
                print!("{}", summary.to_text());
            }
            println!("artifacts in {}", artifacts.output_dir.display());
            Ok(())
        }
        Command::Bench(args) => bench(args),
        Command::Report { dirs, csv } => {
            let rows = report(dirs)?;
            if *csv {
                print!("{}", render_csv(&rows));
            } else {
                print!("{}", render(&rows));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
