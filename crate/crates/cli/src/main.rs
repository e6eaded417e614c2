//! Command-line front end for the clustering solvers.
//!
//! Exit codes: 0 success, 1 input error, 2 infeasible or oracle guard
//! exceeded or verification mismatch, 3 branch/time budget exhausted.

mod bench;
mod generate;
mod solve;
mod verify;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "geocluster", version, about = "k-center / k-supplier / non-uniform k-center toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file with a chosen algorithm.
    Solve(solve::SolveArgs),
    /// Generate a seeded instance file.
    Generate(generate::GenerateArgs),
    /// Check a solution file against its instance.
    Verify(verify::VerifyArgs),
    /// Run algorithm/epsilon sweeps over instance files and emit CSV.
    Bench(bench::BenchArgs),
}

/// Failures carry the process exit code with them.
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        Self { code: 1, message: message.into() }
    }

    pub fn infeasible(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    pub fn budget(message: impl Into<String>) -> Self {
        Self { code: 3, message: message.into() }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    let outcome = match cli.command {
        Command::Solve(args) => solve::run(&args),
        Command::Generate(args) => generate::run(&args),
        Command::Verify(args) => verify::run(&args),
        Command::Bench(args) => bench::run(&args),
    };
    match outcome {
        Ok(()) => {}
        Err(err) => {
            eprintln!("error: {}", err.message);
            std::process::exit(err.code);
        }
    }
}
