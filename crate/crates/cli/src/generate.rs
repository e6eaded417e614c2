//! `geocluster generate`: seeded instance files, byte-identical per seed.

use std::path::PathBuf;

use clap::{Args, ValueEnum};

use geocluster_core::geometry::{DistanceMatrix, Metric};
use geocluster_core::instances::io::{format_instance, InstanceData};
use geocluster_core::instances::{gen_points, PointFamily};
use geocluster_core::nukc_general::NUkCInstance;
use geocluster_core::supplier::KSupplierInstance;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenProblem {
    Ksupplier,
    Kcenter,
    Nukc,
    NukcMetric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    UniformBox,
    GaussianClusters,
    Grid,
}

impl From<Family> for PointFamily {
    fn from(f: Family) -> Self {
        match f {
            Family::UniformBox => PointFamily::UniformBox,
            Family::GaussianClusters => PointFamily::GaussianClusters,
            Family::Grid => PointFamily::Grid,
        }
    }
}

#[derive(Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub problem: GenProblem,
    #[arg(long, value_enum, default_value_t = Family::UniformBox)]
    pub family: Family,
    /// Number of clients.
    #[arg(long)]
    pub n: usize,
    /// Number of facilities (ksupplier only; defaults to n).
    #[arg(long)]
    pub nf: Option<usize>,
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    #[arg(long)]
    pub k: usize,
    /// Number of radius classes (nukc problems).
    #[arg(long, default_value_t = 1)]
    pub t: usize,
    /// Comma-separated strictly decreasing radii; default 2^(t-1), ..., 1.
    #[arg(long, value_delimiter = ',')]
    pub radii: Option<Vec<f64>>,
    /// Comma-separated per-class counts summing to k; default puts the
    /// surplus in the largest class.
    #[arg(long, value_delimiter = ',')]
    pub counts: Option<Vec<usize>>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Cluster spread for gaussian-clusters.
    #[arg(long, default_value_t = 0.1)]
    pub spread: f64,
    /// Output path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(args: &GenerateArgs) -> Result<(), CliError> {
    if args.n == 0 || args.d == 0 || args.k == 0 {
        return Err(CliError::input("--n, --d, and --k must be positive"));
    }
    let family: PointFamily = args.family.into();
    let generated = gen_points(family, args.n, args.d, args.k, args.seed, args.spread);

    let (radii, counts) = nukc_shape(args)?;
    let data = match args.problem {
        GenProblem::Ksupplier => {
            let nf = args.nf.unwrap_or(args.n);
            if nf < args.k {
                return Err(CliError::input(format!("--nf {nf} is below --k {}", args.k)));
            }
            let facilities =
                gen_points(family, nf, args.d, args.k, args.seed.wrapping_add(0x9E37_79B9), args.spread);
            InstanceData::KSupplier(
                KSupplierInstance::new(generated.points.clone(), facilities.points, args.k)
                    .map_err(|e| CliError::input(e.to_string()))?,
            )
        }
        GenProblem::Kcenter => InstanceData::KSupplier(
            KSupplierInstance::new(generated.points.clone(), generated.points.clone(), args.k)
                .map_err(|e| CliError::input(e.to_string()))?,
        ),
        GenProblem::Nukc => InstanceData::NUkCEuclid {
            clients: generated.points.clone(),
            facilities: None,
            radii,
            counts,
        },
        GenProblem::NukcMetric => {
            let pts = &generated.points;
            let rows: Vec<Vec<f64>> = pts
                .iter()
                .map(|a| pts.iter().map(|b| a.distance(b)).collect())
                .collect();
            let matrix = DistanceMatrix::new(rows).map_err(|e| CliError::input(e.to_string()))?;
            let ids: Vec<usize> = (0..pts.len()).collect();
            InstanceData::NUkCMetric(
                NUkCInstance::discrete(Metric::Matrix(matrix), ids.clone(), ids, radii, counts)
                    .map_err(|e| CliError::input(e.to_string()))?,
            )
        }
    };

    let mut text = String::new();
    text.push_str(&format!(
        "# generated: problem={} family={} n={} d={} k={} seed={} spread={}\n",
        match args.problem {
            GenProblem::Ksupplier => "ksupplier",
            GenProblem::Kcenter => "kcenter",
            GenProblem::Nukc => "nukc",
            GenProblem::NukcMetric => "nukc-metric",
        },
        match args.family {
            Family::UniformBox => "uniform-box",
            Family::GaussianClusters => "gaussian-clusters",
            Family::Grid => "grid",
        },
        args.n,
        args.d,
        args.k,
        args.seed,
        args.spread
    ));
    if let Some(planted) = &generated.planted {
        text.push_str(&format!("# planted-cost-bound {:.16e}\n", planted.cost_bound));
        for c in &planted.centers {
            let coords: Vec<String> = c.coords().iter().map(|v| format!("{v:.16e}")).collect();
            text.push_str(&format!("# planted-center {}\n", coords.join(" ")));
        }
    }
    text.push_str(&format_instance(&data));

    match &args.out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::input(e.to_string()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn nukc_shape(args: &GenerateArgs) -> Result<(Vec<f64>, Vec<usize>), CliError> {
    if args.t == 0 || args.t > args.k {
        return Err(CliError::input("--t must satisfy 1 <= t <= k"));
    }
    let radii = match &args.radii {
        Some(r) => r.clone(),
        None => (0..args.t).map(|i| 2f64.powi((args.t - 1 - i) as i32)).collect(),
    };
    let counts = match &args.counts {
        Some(c) => c.clone(),
        None => {
            let mut counts = vec![1usize; args.t];
            counts[0] += args.k - args.t;
            counts
        }
    };
    if radii.len() != args.t || counts.len() != args.t {
        return Err(CliError::input("--radii/--counts must have exactly t entries"));
    }
    if radii.windows(2).any(|w| w[0] <= w[1]) || radii.iter().any(|&r| r <= 0.0) {
        return Err(CliError::input("--radii must be strictly decreasing and positive"));
    }
    if counts.iter().sum::<usize>() != args.k || counts.iter().any(|&c| c == 0) {
        return Err(CliError::input("--counts must be positive and sum to k"));
    }
    Ok((radii, counts))
}
