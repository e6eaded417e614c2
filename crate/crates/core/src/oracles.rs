//! Exact brute-force references and classical baselines.
//!
//! Everything here is desk-scale by design: guarded exhaustive searches used
//! to validate the parameterized solvers, plus the farthest-first traversal
//! baseline.

use itertools::Itertools;
use thiserror::Error;

use crate::geometry::{meb, Point};
use crate::nukc_general::{BallCenter, NUkCInstance, NUkCSolution, PlacedBall};
use crate::supplier::{KSupplierInstance, SolveReport, SolveStats};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("search space {size} exceeds the oracle guard {limit}")]
    GuardExceeded { size: u128, limit: u128 },
    #[error("empty input")]
    EmptyInput,
}

const SUBSET_GUARD: u128 = 10_000_000;
const PARTITION_POINT_GUARD: usize = 12;
const NUKC_POINT_GUARD: usize = 10;

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Exhaustive k-supplier optimum over all center subsets of size `min(k, |F|)`.
/// Returns the lexicographically first optimal subset.
pub fn brute_ksupplier(inst: &KSupplierInstance) -> Result<(f64, Vec<Point>), OracleError> {
    let k = inst.k.min(inst.facilities.len());
    let size = binomial(inst.facilities.len(), k);
    if size > SUBSET_GUARD {
        return Err(OracleError::GuardExceeded { size, limit: SUBSET_GUARD });
    }
    if inst.facilities.is_empty() {
        return Err(OracleError::EmptyInput);
    }
    let mut best: Option<(f64, Vec<usize>)> = None;
    for combo in (0..inst.facilities.len()).combinations(k) {
        let cost = inst
            .clients
            .iter()
            .map(|c| {
                combo
                    .iter()
                    .map(|&f| c.distance(&inst.facilities[f]))
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max);
        if best.as_ref().map_or(true, |(b, _)| cost < *b) {
            best = Some((cost, combo));
        }
    }
    let (cost, combo) = best.expect("nonempty combination stream");
    Ok((cost, combo.into_iter().map(|f| inst.facilities[f].clone()).collect()))
}

/// Exact continuous k-center: enumerate all partitions of the clients into at
/// most `k` parts; the cost of a partition is the largest part MEB radius.
pub fn brute_kcenter_continuous(clients: &[Point], k: usize) -> Result<(f64, Vec<Point>), OracleError> {
    if clients.is_empty() {
        return Err(OracleError::EmptyInput);
    }
    if clients.len() > PARTITION_POINT_GUARD {
        return Err(OracleError::GuardExceeded {
            size: clients.len() as u128,
            limit: PARTITION_POINT_GUARD as u128,
        });
    }
    if k >= clients.len() {
        return Ok((0.0, clients.to_vec()));
    }
    let mut best: Option<(f64, Vec<Point>)> = None;
    for_each_partition(clients.len(), k, &mut |labels, parts| {
        let mut radius = 0.0_f64;
        let mut centers = Vec::with_capacity(parts);
        for part in 0..parts {
            let members: Vec<Point> = labels
                .iter()
                .enumerate()
                .filter(|(_, &l)| l == part)
                .map(|(i, _)| clients[i].clone())
                .collect();
            let ball = meb(&members).expect("partition parts are nonempty");
            radius = radius.max(ball.radius);
            centers.push(ball.center);
        }
        if best.as_ref().map_or(true, |(b, _)| radius < *b) {
            best = Some((radius, centers));
        }
    });
    Ok(best.expect("at least one partition"))
}

/// Exact non-uniform optimum.
///
/// Euclidean instances are solved continuously: enumerate partitions into at
/// most `k` parts, sort the part MEB radii descending and match them with the
/// radius multiset sorted descending. For a fixed partition that matching is
/// optimal: if a larger MEB were matched to a smaller radius than some other
/// part, swapping the two assignments cannot increase either ratio.
/// Explicit-matrix instances are solved by enumerating, per radius class, all
/// facility subsets of the class size.
pub fn brute_nukc(inst: &NUkCInstance) -> Result<(f64, NUkCSolution), OracleError> {
    if inst.continuous {
        brute_nukc_continuous(inst)
    } else {
        brute_nukc_discrete(inst)
    }
}

fn brute_nukc_continuous(inst: &NUkCInstance) -> Result<(f64, NUkCSolution), OracleError> {
    let clients = inst.client_points().expect("euclidean instance");
    if clients.is_empty() {
        return Err(OracleError::EmptyInput);
    }
    if clients.len() > NUKC_POINT_GUARD {
        return Err(OracleError::GuardExceeded {
            size: clients.len() as u128,
            limit: NUKC_POINT_GUARD as u128,
        });
    }
    // Radius multiset descending, remembering the class of each copy.
    let mut radius_pool: Vec<(f64, usize)> = Vec::new();
    for (class, (&r, &count)) in inst.radii.iter().zip(&inst.counts).enumerate() {
        for _ in 0..count {
            radius_pool.push((r, class));
        }
    }
    let k = radius_pool.len();
    let mut best: Option<(f64, NUkCSolution)> = None;
    for_each_partition(clients.len(), k, &mut |labels, parts| {
        let mut part_balls = Vec::with_capacity(parts);
        for part in 0..parts {
            let members: Vec<Point> = labels
                .iter()
                .enumerate()
                .filter(|(_, &l)| l == part)
                .map(|(i, _)| clients[i].clone())
                .collect();
            part_balls.push(meb(&members).expect("nonempty part"));
        }
        part_balls.sort_by(|a, b| b.radius.total_cmp(&a.radius));
        let dilation = part_balls
            .iter()
            .zip(&radius_pool)
            .map(|(ball, &(r, _))| ball.radius / r)
            .fold(0.0_f64, f64::max);
        if best.as_ref().map_or(true, |(b, _)| dilation < *b) {
            let balls = part_balls
                .into_iter()
                .zip(&radius_pool)
                .map(|(ball, &(_, class))| PlacedBall {
                    center: BallCenter::Free(ball.center),
                    radius_index: class,
                })
                .collect();
            best = Some((dilation, NUkCSolution { balls, dilation }));
        }
    });
    Ok(best.expect("at least one partition"))
}

fn brute_nukc_discrete(inst: &NUkCInstance) -> Result<(f64, NUkCSolution), OracleError> {
    let nf = inst.facilities.len();
    if nf == 0 || inst.clients.is_empty() {
        return Err(OracleError::EmptyInput);
    }
    let size = inst
        .counts
        .iter()
        .map(|&c| binomial(nf, c.min(nf)))
        .fold(1u128, |a, b| a.saturating_mul(b));
    if size > SUBSET_GUARD {
        return Err(OracleError::GuardExceeded { size, limit: SUBSET_GUARD });
    }
    let per_class: Vec<Vec<Vec<usize>>> = inst
        .counts
        .iter()
        .map(|&c| (0..nf).combinations(c.min(nf)).collect())
        .collect();
    let mut best: Option<(f64, Vec<Vec<usize>>)> = None;
    let mut choice: Vec<usize> = vec![0; per_class.len()];
    loop {
        let assignment: Vec<&Vec<usize>> = choice
            .iter()
            .enumerate()
            .map(|(class, &c)| &per_class[class][c])
            .collect();
        let dilation = inst
            .clients
            .iter()
            .map(|&client| {
                assignment
                    .iter()
                    .enumerate()
                    .flat_map(|(class, subset)| {
                        subset.iter().map(move |&f| {
                            inst.metric.distance(client, inst.facilities[f]) / inst.radii[class]
                        })
                    })
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0_f64, f64::max);
        if best.as_ref().map_or(true, |(b, _)| dilation < *b) {
            best = Some((dilation, assignment.into_iter().cloned().collect()));
        }
        let mut axis = 0;
        loop {
            if axis == choice.len() {
                let (dilation, picked) = best.expect("nonempty assignment stream");
                let balls = picked
                    .iter()
                    .enumerate()
                    .flat_map(|(class, subset)| {
                        subset.iter().map(move |&f| PlacedBall {
                            center: BallCenter::Facility(inst.facilities[f]),
                            radius_index: class,
                        })
                    })
                    .collect();
                return Ok((dilation, NUkCSolution { balls, dilation }));
            }
            choice[axis] += 1;
            if choice[axis] < per_class[axis].len() {
                break;
            }
            choice[axis] = 0;
            axis += 1;
        }
    }
}

/// Farthest-first traversal: a 2-approximation for k-center whose centers are
/// input points. The first center is a seeded uniform choice.
pub fn gonzalez_2approx(clients: &[Point], k: usize, seed: u64) -> SolveReport {
    use rand::{Rng, SeedableRng};
    assert!(k >= 1);
    let start = std::time::Instant::now();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let first = rng.gen_range(0..clients.len());
    let mut chosen = vec![first];
    let mut dist: Vec<f64> = clients.iter().map(|p| p.distance(&clients[first])).collect();
    while chosen.len() < k.min(clients.len()) {
        let (far, _) = dist
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |acc, (i, &d)| if d > acc.1 { (i, d) } else { acc });
        chosen.push(far);
        for (d, p) in dist.iter_mut().zip(clients) {
            *d = d.min(p.distance(&clients[far]));
        }
    }
    let centers: Vec<Point> = chosen.iter().map(|&i| clients[i].clone()).collect();
    SolveReport::evaluated(centers, clients, SolveStats { wall: start.elapsed(), ..SolveStats::default() })
}

/// Visit every partition of `{0..n}` into at most `max_parts` nonempty parts,
/// encoded as restricted-growth strings for a canonical order.
pub fn for_each_partition(n: usize, max_parts: usize, visit: &mut dyn FnMut(&[usize], usize)) {
    fn rec(
        labels: &mut Vec<usize>,
        n: usize,
        used: usize,
        max_parts: usize,
        visit: &mut dyn FnMut(&[usize], usize),
    ) {
        if labels.len() == n {
            visit(labels, used);
            return;
        }
        let cap = (used + 1).min(max_parts);
        for label in 0..cap {
            labels.push(label);
            rec(labels, n, used.max(label + 1), max_parts, visit);
            labels.pop();
        }
    }
    let mut labels = Vec::with_capacity(n);
    rec(&mut labels, n, 0, max_parts, visit);
}
