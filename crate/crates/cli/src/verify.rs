//! `geocluster verify`: recompute a solution file's cost against its
//! instance and check the ball budgets.

use std::path::PathBuf;

use clap::Args;

use geocluster_core::instances::io::{read_instance, read_solution, InstanceData, SolutionData};
use geocluster_core::nukc_general::NUkCInstance;
use geocluster_core::{BallCenter, Point};

use crate::CliError;

const VERIFY_REL_TOL: f64 = 1e-7;

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub instance: PathBuf,
    #[arg(long)]
    pub solution: PathBuf,
}

pub fn run(args: &VerifyArgs) -> Result<(), CliError> {
    let data = read_instance(&args.instance).map_err(|e| CliError::input(e.to_string()))?;
    let sol = read_solution(&args.solution).map_err(|e| CliError::input(e.to_string()))?;
    match &data {
        InstanceData::KSupplier(inst) => {
            verify_uniform(&inst.clients, inst.k, &sol)?;
        }
        InstanceData::NUkCEuclid { .. } | InstanceData::NUkCMetric(_) => {
            let inst = data.as_discrete_nukc().expect("non-uniform instance");
            verify_nukc(&inst, &sol)?;
        }
    }
    println!("OK cost {:.12e} with {} balls", sol.cost, sol.balls.len());
    Ok(())
}

fn close(recomputed: f64, claimed: f64) -> bool {
    (recomputed - claimed).abs() <= VERIFY_REL_TOL * claimed.abs() + 1e-12
}

fn center_point(center: &BallCenter, ground: Option<&[Point]>) -> Result<Point, CliError> {
    match center {
        BallCenter::Free(p) => Ok(p.clone()),
        BallCenter::Facility(idx) => ground
            .and_then(|pts| pts.get(*idx).cloned())
            .ok_or_else(|| CliError::input(format!("facility index {idx} has no coordinates"))),
    }
}

fn verify_uniform(clients: &[Point], k: usize, sol: &SolutionData) -> Result<(), CliError> {
    if sol.balls.len() > k {
        return Err(CliError::infeasible(format!("{} balls exceed k = {k}", sol.balls.len())));
    }
    let centers: Vec<Point> = sol
        .balls
        .iter()
        .map(|(c, _)| center_point(c, Some(clients)))
        .collect::<Result<_, _>>()?;
    if centers.is_empty() {
        return Err(CliError::infeasible("solution has no balls"));
    }
    let recomputed = clients
        .iter()
        .map(|c| c.distance_to_set(&centers))
        .fold(0.0, f64::max);
    if !close(recomputed, sol.cost) {
        return Err(CliError::infeasible(format!(
            "claimed cost {} but recomputed {recomputed}",
            sol.cost
        )));
    }
    Ok(())
}

fn verify_nukc(inst: &NUkCInstance, sol: &SolutionData) -> Result<(), CliError> {
    let ground = inst.metric.points();
    // Infer each ball's radius class from stored_radius = cost * r_class.
    let mut used = vec![0usize; inst.class_count()];
    let mut classed: Vec<(Point, usize)> = Vec::new();
    for (center, radius) in &sol.balls {
        let class = if sol.cost == 0.0 {
            used.iter()
                .zip(&inst.counts)
                .position(|(u, c)| u < c)
                .ok_or_else(|| CliError::infeasible("more balls than the total budget"))?
        } else {
            let target = radius / sol.cost;
            let (class, best) = inst
                .radii
                .iter()
                .enumerate()
                .map(|(i, &r)| (i, (r - target).abs()))
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .expect("nonempty radii");
            if best > VERIFY_REL_TOL * target.abs().max(1.0) {
                return Err(CliError::infeasible(format!(
                    "ball radius {radius} matches no class at dilation {}",
                    sol.cost
                )));
            }
            class
        };
        used[class] += 1;
        let point = match center {
            BallCenter::Free(p) => Some(p.clone()),
            BallCenter::Facility(idx) => {
                if inst.metric.len() <= *idx {
                    return Err(CliError::input(format!("facility index {idx} out of range")));
                }
                ground.map(|pts| pts[*idx].clone())
            }
        };
        match (point, center) {
            (Some(p), _) => classed.push((p, class)),
            (None, BallCenter::Facility(idx)) => {
                // Matrix metric: distances come from the matrix directly.
                classed.push((Point::new(vec![*idx as f64]), class));
            }
            _ => unreachable!(),
        }
    }
    if used.iter().zip(&inst.counts).any(|(u, c)| u > c) {
        return Err(CliError::infeasible("per-class ball budgets violated"));
    }

    // Recompute the dilation with the inferred classes.
    let recomputed = inst
        .clients
        .iter()
        .map(|&c| {
            sol.balls
                .iter()
                .zip(&classed)
                .map(|((center, _), (point, class))| {
                    let d = match (center, ground) {
                        (BallCenter::Facility(idx), _) => inst.metric.distance(c, *idx),
                        (BallCenter::Free(_), Some(pts)) => pts[c].distance(point),
                        (BallCenter::Free(_), None) => {
                            f64::INFINITY // free centers cannot serve matrix instances
                        }
                    };
                    d / inst.radii[*class]
                })
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max);
    if !close(recomputed, sol.cost) {
        return Err(CliError::infeasible(format!(
            "claimed dilation {} but recomputed {recomputed}",
            sol.cost
        )));
    }
    Ok(())
}
