//! `geocluster bench`: algorithm/epsilon sweeps over instance files, one CSV
//! row per run. Rows are sorted by (instance, algorithm, epsilon) regardless
//! of worker scheduling; `GEOCLUSTER_THREADS` caps the worker pool.

use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use rayon::prelude::*;

use geocluster_core::instances::io::{read_instance, InstanceData};
use geocluster_core::limits::SearchLimits;
use geocluster_core::oracles::{brute_kcenter_continuous, brute_ksupplier, brute_nukc};

use crate::solve::{execute, Algorithm, Problem};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleMode {
    /// Compute the exact optimum when the guards allow it.
    Auto,
    Off,
}

#[derive(Args)]
pub struct BenchArgs {
    /// Instance files or directories (directories are scanned, sorted).
    #[arg(long, num_args = 1.., required = true)]
    pub inputs: Vec<PathBuf>,
    #[arg(long, value_enum)]
    pub problem: Problem,
    /// Comma-separated algorithms.
    #[arg(long, value_delimiter = ',', default_value = "fpt")]
    pub algorithms: Vec<Algorithm>,
    /// Comma-separated epsilons.
    #[arg(long, value_delimiter = ',', default_value = "0.2")]
    pub epsilons: Vec<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = OracleMode::Auto)]
    pub oracle: OracleMode,
    /// CSV output path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

struct Job {
    path: PathBuf,
    algorithm: Algorithm,
    epsilon: f64,
}

pub fn run(args: &BenchArgs) -> Result<(), CliError> {
    let mut files: Vec<PathBuf> = Vec::new();
    for input in &args.inputs {
        collect_files(input, &mut files)?;
    }
    files.sort();
    files.dedup();
    if files.is_empty() {
        return Err(CliError::input("no instance files found"));
    }
    for &eps in &args.epsilons {
        if !(eps > 0.0 && eps <= 1.0) {
            return Err(CliError::input(format!("epsilon {eps} out of (0, 1]")));
        }
    }

    let mut jobs = Vec::new();
    for path in &files {
        for &algorithm in &args.algorithms {
            for &epsilon in &args.epsilons {
                jobs.push(Job { path: path.clone(), algorithm, epsilon });
            }
        }
    }

    let pool = build_pool()?;
    let seed = args.seed;
    let problem = args.problem;
    let oracle_mode = args.oracle;
    let rows: Result<Vec<String>, CliError> = pool.install(|| {
        jobs.par_iter()
            .map(|job| run_job(job, problem, seed, oracle_mode))
            .collect()
    });
    let mut rows = rows?;
    rows.sort();

    let mut csv = String::from("instance,algorithm,epsilon,k,d,n,cost,opt,ratio,ms,branches,seed\n");
    for row in rows {
        csv.push_str(&row);
        csv.push('\n');
    }
    match &args.out {
        Some(path) => std::fs::write(path, csv).map_err(|e| CliError::input(e.to_string()))?,
        None => print!("{csv}"),
    }
    Ok(())
}

fn collect_files(path: &Path, out: &mut Vec<PathBuf>) -> Result<(), CliError> {
    if path.is_dir() {
        let mut entries: Vec<PathBuf> = std::fs::read_dir(path)
            .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .collect();
        entries.sort();
        for entry in entries {
            if entry.is_file() {
                out.push(entry);
            }
        }
        Ok(())
    } else if path.is_file() {
        out.push(path.to_path_buf());
        Ok(())
    } else {
        Err(CliError::input(format!("{}: not found", path.display())))
    }
}

fn build_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(value) = std::env::var("GEOCLUSTER_THREADS") {
        let threads: usize = value
            .parse()
            .map_err(|_| CliError::input(format!("GEOCLUSTER_THREADS='{value}' is not a number")))?;
        builder = builder.num_threads(threads.max(1));
    }
    builder.build().map_err(|e| CliError::input(e.to_string()))
}

fn run_job(job: &Job, problem: Problem, seed: u64, oracle_mode: OracleMode) -> Result<String, CliError> {
    let data = read_instance(&job.path)
        .map_err(|e| CliError::input(format!("{}: {e}", job.path.display())))?;
    let outcome = execute(problem, job.algorithm, &data, job.epsilon, seed, SearchLimits::UNBOUNDED)?;
    let opt = match oracle_mode {
        OracleMode::Off => None,
        OracleMode::Auto => oracle_value(problem, &data),
    };
    let name = job
        .path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| job.path.display().to_string());
    let (opt_str, ratio_str) = match opt {
        Some(opt) if opt > 0.0 => {
            (format!("{opt:.12e}"), format!("{:.9}", outcome.solution.cost / opt))
        }
        Some(opt) => (format!("{opt:.12e}"), String::new()),
        None => (String::new(), String::new()),
    };
    Ok(format!(
        "{name},{},{},{},{},{},{:.12e},{opt_str},{ratio_str},{},{},{seed}",
        job.algorithm.name(),
        job.epsilon,
        outcome.k,
        outcome.dim,
        outcome.n,
        outcome.solution.cost,
        outcome.wall.as_millis(),
        outcome.branches,
    ))
}

/// Exact optimum when the desk-scale guards allow it.
fn oracle_value(problem: Problem, data: &InstanceData) -> Option<f64> {
    match (problem, data) {
        (Problem::Ksupplier, InstanceData::KSupplier(inst)) => {
            brute_ksupplier(inst).ok().map(|(cost, _)| cost)
        }
        (Problem::Kcenter, InstanceData::KSupplier(inst)) => {
            brute_kcenter_continuous(&inst.clients, inst.k).ok().map(|(cost, _)| cost)
        }
        (Problem::NukcGeneral, _) => {
            let inst = data.as_discrete_nukc()?;
            brute_nukc(&inst).ok().map(|(d, _)| d)
        }
        (Problem::NukcEuclid, _) => {
            let inst = data.as_continuous_nukc()?;
            brute_nukc(&inst).ok().map(|(d, _)| d)
        }
        _ => None,
    }
}
