//! `geocluster solve`: run one algorithm on one instance.
//!
//! Standard output is a valid solution file (comment lines carry run
//! details), so `solve ... > out.sol` feeds directly into `verify`. Output is
//! byte-identical across runs with the same arguments; wall time is reported
//! only by `bench`.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, ValueEnum};

use geocluster_core::instances::io::{
    format_solution, read_instance, write_solution, InstanceData, SolutionData,
};
use geocluster_core::limits::{Interrupt, SearchLimits};
use geocluster_core::nukc_euclidean::solve_nukc_euclidean_bounded;
use geocluster_core::nukc_general::{solve_nukc_general_bounded, NUkCInstance, NUkCSolution};
use geocluster_core::oracles::{brute_kcenter_continuous, brute_ksupplier, brute_nukc, gonzalez_2approx, OracleError};
use geocluster_core::supplier::{hs_3approx, solve_kcenter_with, solve_ksupplier_with, KSupplierInstance, SolverConfig, SupplierError};
use geocluster_core::{BallCenter, Point};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Problem {
    Ksupplier,
    Kcenter,
    NukcGeneral,
    NukcEuclid,
}

impl Problem {
    pub fn name(self) -> &'static str {
        match self {
            Problem::Ksupplier => "ksupplier",
            Problem::Kcenter => "kcenter",
            Problem::NukcGeneral => "nukc-general",
            Problem::NukcEuclid => "nukc-euclid",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Fpt,
    Hs3,
    Gonzalez,
    Oracle,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Fpt => "fpt",
            Algorithm::Hs3 => "hs3",
            Algorithm::Gonzalez => "gonzalez",
            Algorithm::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
}

#[derive(Args)]
pub struct SolveArgs {
    #[arg(long, value_enum)]
    pub problem: Problem,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value_t = 0.2)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Algorithm::Fpt)]
    pub algorithm: Algorithm,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
    /// Also write the solution file here.
    #[arg(long)]
    pub solution_out: Option<PathBuf>,
    /// Abort with exit 3 after this many search nodes.
    #[arg(long)]
    pub max_branches: Option<u64>,
    /// Abort with exit 3 after this much wall time.
    #[arg(long)]
    pub timeout_ms: Option<u64>,
}

/// Everything a solve run reports, problem-independent.
pub struct RunOutcome {
    pub solution: SolutionData,
    pub k: usize,
    pub dim: usize,
    pub n: usize,
    pub branches: u64,
    pub probes: usize,
    pub wall: Duration,
}

pub fn run(args: &SolveArgs) -> Result<(), CliError> {
    if !(args.epsilon > 0.0 && args.epsilon <= 1.0) {
        return Err(CliError::input("--epsilon must lie in (0, 1]"));
    }
    let data = read_instance(&args.input).map_err(|e| CliError::input(e.to_string()))?;
    let outcome = execute(args.problem, args.algorithm, &data, args.epsilon, args.seed, limits(args))?;

    let body = format_solution(&outcome.solution);
    match args.output {
        OutputFormat::Text => {
            println!("# problem: {}", args.problem.name());
            println!("# algorithm: {}", args.algorithm.name());
            println!("# epsilon: {} seed: {}", args.epsilon, args.seed);
            println!("# n: {} d: {} k: {}", outcome.n, outcome.dim, outcome.k);
            println!("# probes: {} branches: {}", outcome.probes, outcome.branches);
            print!("{body}");
        }
        OutputFormat::Csv => {
            println!("instance,algorithm,epsilon,k,d,n,cost,opt,ratio,ms,branches,seed");
            println!(
                "{},{},{},{},{},{},{:.12e},,,0,{},{}",
                args.input.display(),
                args.algorithm.name(),
                args.epsilon,
                outcome.k,
                outcome.dim,
                outcome.n,
                outcome.solution.cost,
                outcome.branches,
                args.seed
            );
        }
    }
    if let Some(path) = &args.solution_out {
        write_solution(&outcome.solution, path).map_err(|e| CliError::input(e.to_string()))?;
    }
    Ok(())
}

fn limits(args: &SolveArgs) -> SearchLimits {
    SearchLimits {
        max_nodes: args.max_branches,
        deadline: args.timeout_ms.map(|ms| Instant::now() + Duration::from_millis(ms)),
    }
}

fn solver_config(limits: SearchLimits) -> SolverConfig {
    SolverConfig { max_nodes: limits.max_nodes, deadline: limits.deadline, ..SolverConfig::default() }
}

fn map_supplier_err(err: SupplierError) -> CliError {
    match err {
        SupplierError::BranchBudget | SupplierError::Timeout => CliError::budget(err.to_string()),
        SupplierError::TooFewFacilities { .. } => CliError::infeasible(err.to_string()),
        other => CliError::input(other.to_string()),
    }
}

fn map_oracle_err(err: OracleError) -> CliError {
    CliError::infeasible(err.to_string())
}

fn map_interrupt(err: Interrupt) -> CliError {
    CliError::budget(err.to_string())
}

/// Uniform-cover solution: every ball radius equals the cost.
fn uniform_solution(centers: Vec<Point>, cost: f64) -> SolutionData {
    SolutionData {
        cost,
        balls: centers.into_iter().map(|c| (BallCenter::Free(c), cost)).collect(),
    }
}

/// Non-uniform solution: ball radii are normalized to `dilation * r_class`.
fn nukc_solution(sol: &NUkCSolution, inst: &NUkCInstance) -> SolutionData {
    SolutionData {
        cost: sol.dilation,
        balls: sol
            .balls
            .iter()
            .map(|b| (b.center.clone(), sol.dilation * inst.radii[b.radius_index]))
            .collect(),
    }
}

pub fn execute(
    problem: Problem,
    algorithm: Algorithm,
    data: &InstanceData,
    epsilon: f64,
    seed: u64,
    limits: SearchLimits,
) -> Result<RunOutcome, CliError> {
    let start = Instant::now();
    match problem {
        Problem::Ksupplier => {
            let InstanceData::KSupplier(inst) = data else {
                return Err(CliError::input("ksupplier expects a KSUPPLIER instance file"));
            };
            let (solution, branches, probes) = run_ksupplier(algorithm, inst, epsilon, seed, limits)?;
            Ok(RunOutcome {
                solution,
                k: inst.k,
                dim: inst.dim(),
                n: inst.clients.len(),
                branches,
                probes,
                wall: start.elapsed(),
            })
        }
        Problem::Kcenter => {
            let InstanceData::KSupplier(inst) = data else {
                return Err(CliError::input("kcenter expects a KSUPPLIER instance file (facilities are ignored)"));
            };
            let (solution, branches, probes) = run_kcenter(algorithm, inst, epsilon, seed, limits)?;
            Ok(RunOutcome {
                solution,
                k: inst.k,
                dim: inst.dim(),
                n: inst.clients.len(),
                branches,
                probes,
                wall: start.elapsed(),
            })
        }
        Problem::NukcGeneral => {
            let inst = data
                .as_discrete_nukc()
                .ok_or_else(|| CliError::input("nukc-general expects a NUKC or NUKC-METRIC instance file"))?;
            let (solution, branches) = run_nukc_general(algorithm, &inst, limits)?;
            Ok(RunOutcome {
                solution,
                k: inst.k(),
                dim: inst.metric.points().map_or(0, |p| p[0].dim()),
                n: inst.clients.len(),
                branches,
                probes: 0,
                wall: start.elapsed(),
            })
        }
        Problem::NukcEuclid => {
            let inst = data
                .as_continuous_nukc()
                .ok_or_else(|| CliError::input("nukc-euclid expects a Euclidean NUKC instance file"))?;
            let (solution, branches, probes) = run_nukc_euclid(algorithm, &inst, epsilon, seed, limits)?;
            Ok(RunOutcome {
                solution,
                k: inst.k(),
                dim: inst.metric.points().map_or(0, |p| p[0].dim()),
                n: inst.clients.len(),
                branches,
                probes,
                wall: start.elapsed(),
            })
        }
    }
}

fn run_ksupplier(
    algorithm: Algorithm,
    inst: &KSupplierInstance,
    epsilon: f64,
    seed: u64,
    limits: SearchLimits,
) -> Result<(SolutionData, u64, usize), CliError> {
    match algorithm {
        Algorithm::Fpt => {
            let report = solve_ksupplier_with(inst, epsilon, seed, &solver_config(limits))
                .map_err(map_supplier_err)?;
            Ok((uniform_solution(report.centers.clone(), report.cost), report.stats.guesses, report.stats.probes))
        }
        Algorithm::Hs3 => {
            let report = hs_3approx(inst).map_err(map_supplier_err)?;
            Ok((uniform_solution(report.centers.clone(), report.cost), 0, 0))
        }
        Algorithm::Oracle => {
            let (cost, centers) = brute_ksupplier(inst).map_err(map_oracle_err)?;
            Ok((uniform_solution(centers, cost), 0, 0))
        }
        Algorithm::Gonzalez => Err(CliError::input(
            "gonzalez picks centers among clients; use --problem kcenter",
        )),
    }
}

fn run_kcenter(
    algorithm: Algorithm,
    inst: &KSupplierInstance,
    epsilon: f64,
    seed: u64,
    limits: SearchLimits,
) -> Result<(SolutionData, u64, usize), CliError> {
    match algorithm {
        Algorithm::Fpt => {
            let report = solve_kcenter_with(&inst.clients, inst.k, epsilon, seed, &solver_config(limits))
                .map_err(map_supplier_err)?;
            Ok((uniform_solution(report.centers.clone(), report.cost), report.stats.guesses, report.stats.probes))
        }
        Algorithm::Gonzalez => {
            let report = gonzalez_2approx(&inst.clients, inst.k, seed);
            Ok((uniform_solution(report.centers.clone(), report.cost), 0, 0))
        }
        Algorithm::Oracle => {
            let (cost, centers) = brute_kcenter_continuous(&inst.clients, inst.k).map_err(map_oracle_err)?;
            Ok((uniform_solution(centers, cost), 0, 0))
        }
        Algorithm::Hs3 => {
            // Discrete baseline with candidate centers at the clients.
            let discrete = KSupplierInstance::new(inst.clients.clone(), inst.clients.clone(), inst.k)
                .map_err(map_supplier_err)?;
            let report = hs_3approx(&discrete).map_err(map_supplier_err)?;
            Ok((uniform_solution(report.centers.clone(), report.cost), 0, 0))
        }
    }
}

fn run_nukc_general(
    algorithm: Algorithm,
    inst: &NUkCInstance,
    limits: SearchLimits,
) -> Result<(SolutionData, u64), CliError> {
    match algorithm {
        Algorithm::Fpt => {
            let mut nodes = 0;
            let sol = solve_nukc_general_bounded(inst, limits, &mut nodes).map_err(map_interrupt)?;
            Ok((nukc_solution(&sol, inst), nodes))
        }
        Algorithm::Oracle => {
            let mut discrete = inst.clone();
            discrete.continuous = false;
            let (_, sol) = brute_nukc(&discrete).map_err(map_oracle_err)?;
            Ok((nukc_solution(&sol, inst), 0))
        }
        other => Err(CliError::input(format!(
            "algorithm '{}' does not apply to nukc-general",
            other.name()
        ))),
    }
}

fn run_nukc_euclid(
    algorithm: Algorithm,
    inst: &NUkCInstance,
    epsilon: f64,
    seed: u64,
    limits: SearchLimits,
) -> Result<(SolutionData, u64, usize), CliError> {
    let clients = inst.client_points().expect("euclid instances have coordinates");
    match algorithm {
        Algorithm::Fpt => {
            let mut nodes = 0;
            let report =
                solve_nukc_euclidean_bounded(&clients, &inst.radii, &inst.counts, epsilon, seed, limits, &mut nodes)
                    .map_err(map_interrupt)?;
            Ok((nukc_solution(&report.solution, inst), nodes, report.probes))
        }
        Algorithm::Oracle => {
            let (_, sol) = brute_nukc(inst).map_err(map_oracle_err)?;
            Ok((nukc_solution(&sol, inst), 0, 0))
        }
        other => Err(CliError::input(format!(
            "algorithm '{}' does not apply to nukc-euclid",
            other.name()
        ))),
    }
}
