//! Balanced sphere separators with an exactly verified crossing contract.
//!
//! The construction centers a sphere at an input point with locally dense
//! neighborhood, places the sphere radius at the midpoint of a gap in the
//! sorted distance profile (so no input point sits on the sphere), and covers
//! the sphere with an adaptively refined net: a cell stops subdividing once
//! its diameter is small relative to the distance from the cell to the input
//! set. For any inside/outside pair the segment between them crosses the
//! sphere at a point whose distance to the input set lower-bounds both side
//! distances, so the net spacing rule implies the crossing contract directly.
//! The contract is still re-verified exactly before returning.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::geometry::Point;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeparatorError {
    #[error("separator requires at least 2 points")]
    TooFewPoints,
    #[error("input points must be pairwise distinct")]
    DuplicatePoints,
    #[error("no balanced separator satisfying the crossing contract after {0} attempts")]
    ContractUnreachable(usize),
}

/// Tuning knobs; defaults match the documented contract.
#[derive(Debug, Clone)]
pub struct SeparatorConfig {
    /// Soft bound constant: flag the output when `|Z| > size_constant * n^{1-1/d}`.
    pub size_constant: f64,
    /// Resampling rounds before giving up with a hard error.
    pub max_retries: usize,
}

impl Default for SeparatorConfig {
    fn default() -> Self {
        Self { size_constant: 64.0, max_retries: 32 }
    }
}

/// A separator: inserted boundary points plus a two-sided partition of the
/// input indices.
#[derive(Debug, Clone)]
pub struct SeparatorResult {
    /// Inserted points; never part of the input.
    pub boundary: Vec<Point>,
    /// Indices of input points strictly inside the separating sphere.
    pub inner: Vec<usize>,
    /// The remaining input indices.
    pub outer: Vec<usize>,
    /// Diagnostic: the boundary exceeded the configured soft size bound.
    pub size_exceeded: bool,
}

/// Balance constant: `ceil(2 sqrt(d))^d + 1`, saturating for large `d`.
pub fn c_d(dim: usize) -> u128 {
    assert!(dim >= 1);
    let base = (2.0 * (dim as f64).sqrt()).ceil() as u128;
    base.checked_pow(dim as u32)
        .and_then(|v| v.checked_add(1))
        .unwrap_or(u128::MAX)
}

/// Largest allowed side size: `floor(n (1 - 1/c_d))`, computed exactly as
/// `n - ceil(n / c_d)`.
pub fn balance_bound(n: usize, dim: usize) -> usize {
    let c = c_d(dim);
    let n128 = n as u128;
    let ceil_frac = n128.div_ceil(c).max(1);
    (n128 - ceil_frac) as usize
}

pub fn voronoi_separator(points: &[Point], seed: u64) -> Result<SeparatorResult, SeparatorError> {
    voronoi_separator_with(points, seed, &SeparatorConfig::default())
}

pub fn voronoi_separator_with(
    points: &[Point],
    seed: u64,
    config: &SeparatorConfig,
) -> Result<SeparatorResult, SeparatorError> {
    let n = points.len();
    if n < 2 {
        return Err(SeparatorError::TooFewPoints);
    }
    let dim = points[0].dim();
    {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| points[a].lex_cmp(&points[b]));
        if order.windows(2).any(|w| points[w[0]] == points[w[1]]) {
            return Err(SeparatorError::DuplicatePoints);
        }
    }

    let c = c_d(dim);
    let neighbor_rank = usize::try_from((n as u128).div_ceil(c)).unwrap().max(2);
    let bound = balance_bound(n, dim);

    // Candidate centers ordered by how tight their neighbor_rank-th
    // neighborhood is (self counts as the first neighbor).
    let mut candidates: Vec<(f64, usize)> = (0..n)
        .map(|i| {
            let mut d: Vec<f64> = (0..n)
                .filter(|&j| j != i)
                .map(|j| points[i].distance(&points[j]))
                .collect();
            d.sort_by(f64::total_cmp);
            (d[neighbor_rank - 2], i)
        })
        .collect();
    candidates.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut eta = 0.9;
    let mut attempts = 0usize;

    for round in 0..config.max_retries {
        let (radius_hint, center_idx) = candidates[round % candidates.len()];
        let center = &points[center_idx];

        // Sorted distinct distances from the center, with inside counts.
        let mut dists: Vec<f64> = (0..n)
            .filter(|&j| j != center_idx)
            .map(|j| center.distance(&points[j]))
            .collect();
        dists.sort_by(f64::total_cmp);
        let mut distinct: Vec<(f64, usize)> = Vec::new(); // (value, count at <= value)
        for &d in &dists {
            match distinct.last_mut() {
                Some((v, cnt)) if *v == d => *cnt += 1,
                _ => {
                    let prev = distinct.last().map_or(0, |(_, c)| *c);
                    distinct.push((d, prev + 1));
                }
            }
        }

        // Gaps: (low, high, inside_count) where inside_count = |{p : d(o,p) < mid}|
        // including the center itself. Keep only balance-valid gaps.
        let mut gaps: Vec<(f64, f64, usize)> = Vec::new();
        let first = distinct[0].0;
        if first > 0.0 {
            gaps.push((0.0, first, 1));
        }
        for w in distinct.windows(2) {
            let (lo, cnt) = w[0];
            let (hi, _) = w[1];
            gaps.push((lo, hi, cnt + 1));
        }
        gaps.retain(|&(lo, hi, inside)| {
            hi > lo && inside <= bound && n - inside <= bound
        });
        if gaps.is_empty() {
            attempts += 1;
            continue;
        }

        // Primary: sample a radius uniformly from [r, 2r] and snap to the
        // containing valid gap. Secondary rounds: take the most balanced gap.
        let gap = if round < config.max_retries / 2 {
            let sample = rng.gen_range(radius_hint..=2.0 * radius_hint);
            gaps.iter()
                .find(|&&(lo, hi, _)| lo <= sample && sample < hi)
                .copied()
        } else {
            None
        };
        let gap = gap.unwrap_or_else(|| {
            *gaps
                .iter()
                .min_by_key(|&&(_, _, inside)| {
                    ((inside as i64) * 2 - n as i64).unsigned_abs()
                })
                .unwrap()
        });

        let (lo, hi, _) = gap;
        let sphere_radius = 0.5 * (lo + hi);
        attempts += 1;

        let boundary = match adaptive_sphere_net(center, sphere_radius, points, eta) {
            Some(b) => b,
            None => continue,
        };

        let mut inner = Vec::new();
        let mut outer = Vec::new();
        for j in 0..n {
            if j == center_idx || center.distance(&points[j]) < sphere_radius {
                inner.push(j);
            } else {
                outer.push(j);
            }
        }
        debug_assert!(inner.len() <= bound && outer.len() <= bound);

        let inner_pts: Vec<Point> = inner.iter().map(|&i| points[i].clone()).collect();
        let outer_pts: Vec<Point> = outer.iter().map(|&i| points[i].clone()).collect();
        if !crossing_check(&boundary, &inner_pts, &outer_pts) {
            eta *= 0.5;
            continue;
        }

        let soft_cap = config.size_constant * (n as f64).powf(1.0 - 1.0 / dim as f64);
        return Ok(SeparatorResult {
            size_exceeded: (boundary.len() as f64) > soft_cap,
            boundary,
            inner,
            outer,
        });
    }
    Err(SeparatorError::ContractUnreachable(attempts))
}

/// Exact verifier for the crossing contract: every cross pair `(a, b)` must
/// satisfy `d(a, Z) <= d(a, b)` and `d(b, Z) <= d(a, b)`.
pub fn crossing_check(boundary: &[Point], side_a: &[Point], side_b: &[Point]) -> bool {
    if side_a.is_empty() || side_b.is_empty() {
        return true;
    }
    let near = |pts: &[Point]| -> Vec<f64> {
        pts.iter().map(|p| p.distance_to_set(boundary)).collect()
    };
    let near_a = near(side_a);
    let near_b = near(side_b);
    for (a, &da) in side_a.iter().zip(&near_a) {
        for (b, &db) in side_b.iter().zip(&near_b) {
            let dab = a.distance(b);
            if da > dab || db > dab {
                return false;
            }
        }
    }
    true
}

const MAX_CELL_DEPTH: usize = 48;
const MAX_CELLS: usize = 4_000_000;

/// Covers the sphere `|x - center| = radius` with points such that every
/// sphere point `t` has a net point within `eta * dist(t, inputs)`. Returns
/// `None` when the refinement budget is exhausted (an input point nearly
/// touching the sphere), in which case the caller picks another radius.
fn adaptive_sphere_net(center: &Point, radius: f64, inputs: &[Point], eta: f64) -> Option<Vec<Point>> {
    let dim = center.dim();
    let sqrt_d = (dim as f64).sqrt();
    let mut net: Vec<Point> = Vec::new();
    // Cells are (corner offset index vector, half_width, depth) in coordinates
    // relative to `center`; the root cube spans [-radius, radius] per axis.
    let mut stack: Vec<(Vec<f64>, f64, usize)> = vec![(vec![0.0; dim], radius, 0)];
    let mut visited = 0usize;
    while let Some((offset, half, depth)) = stack.pop() {
        visited += 1;
        if visited > MAX_CELLS {
            return None;
        }
        // Distance range from the sphere center to this cell.
        let mut lo2 = 0.0;
        let mut hi2 = 0.0;
        for &o in &offset {
            let a = (o.abs() - half).max(0.0);
            let b = o.abs() + half;
            lo2 += a * a;
            hi2 += b * b;
        }
        if hi2.sqrt() < radius || lo2.sqrt() > radius {
            continue;
        }
        let cell_diam = 2.0 * half * sqrt_d;
        let cell_center = Point::new(
            center.coords().iter().zip(&offset).map(|(c, o)| c + o).collect(),
        );
        let nearest_input = cell_center.distance_to_set(inputs);
        if cell_diam <= eta * (nearest_input - 0.5 * cell_diam) {
            let norm = offset.iter().map(|o| o * o).sum::<f64>().sqrt();
            if norm > 0.0 {
                let z = Point::new(
                    center
                        .coords()
                        .iter()
                        .zip(&offset)
                        .map(|(c, o)| c + o * radius / norm)
                        .collect(),
                );
                net.push(z);
                continue;
            }
            // Center cell cannot be projected; fall through to subdivision.
        }
        if depth >= MAX_CELL_DEPTH {
            return None;
        }
        let child_half = half * 0.5;
        for mask in 0..(1usize << dim) {
            let child: Vec<f64> = offset
                .iter()
                .enumerate()
                .map(|(axis, o)| {
                    if mask >> axis & 1 == 1 {
                        o + child_half
                    } else {
                        o - child_half
                    }
                })
                .collect();
            stack.push((child, child_half, depth + 1));
        }
    }
    // Exact duplicates arise when a sphere point lies on a shared cell
    // boundary; drop them for a cleaner count.
    net.sort_by(|a, b| a.lex_cmp(b));
    net.dedup();
    Some(net)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(coords: &[f64]) -> Point {
        Point::new(coords.to_vec())
    }

    #[test]
    fn c_d_values() {
        assert_eq!(c_d(2), 10); // ceil(2 sqrt 2)^2 + 1 = 9 + 1
        assert_eq!(c_d(1), 3);
        assert_eq!(c_d(3), 65); // ceil(2 sqrt 3) = 4, 4^3 + 1
        assert_eq!(c_d(4), 257); // 4^4 + 1
    }

    #[test]
    fn crossing_check_midpoint() {
        assert!(crossing_check(&[pt(&[0.5])], &[pt(&[0.0])], &[pt(&[1.0])]));
    }

    #[test]
    fn crossing_check_far_separator() {
        assert!(!crossing_check(&[pt(&[10.0])], &[pt(&[0.0])], &[pt(&[1.0])]));
    }

    #[test]
    fn crossing_check_empty_side() {
        assert!(crossing_check(&[], &[], &[pt(&[1.0])]));
    }

    #[test]
    fn two_points_line() {
        let pts = vec![pt(&[0.0]), pt(&[1.0])];
        let sep = voronoi_separator(&pts, 0).unwrap();
        assert_eq!(sep.inner.len(), 1);
        assert_eq!(sep.outer.len(), 1);
        // Some boundary point is no farther from each input than the other input.
        assert!(pts[0].distance_to_set(&sep.boundary) <= 1.0 + 1e-12);
        assert!(pts[1].distance_to_set(&sep.boundary) <= 1.0 + 1e-12);
    }

    #[test]
    fn grid_balance() {
        let mut pts = Vec::new();
        for x in 0..5 {
            for y in 0..4 {
                pts.push(pt(&[x as f64, y as f64]));
            }
        }
        let sep = voronoi_separator(&pts, 0).unwrap();
        assert!(sep.inner.len() <= 18 && sep.outer.len() <= 18);
        assert_eq!(sep.inner.len() + sep.outer.len(), 20);
    }

    #[test]
    fn duplicate_points_rejected() {
        let pts = vec![pt(&[0.0]), pt(&[0.0])];
        assert_eq!(voronoi_separator(&pts, 0).unwrap_err(), SeparatorError::DuplicatePoints);
    }

    #[test]
    fn random_3d_contract_over_seeds() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for seed in 0..20 {
            let pts: Vec<Point> = (0..50)
                .map(|_| pt(&[rng.gen::<f64>(), rng.gen::<f64>(), rng.gen::<f64>()]))
                .collect();
            let sep = voronoi_separator(&pts, seed).unwrap();
            let inner: Vec<Point> = sep.inner.iter().map(|&i| pts[i].clone()).collect();
            let outer: Vec<Point> = sep.outer.iter().map(|&i| pts[i].clone()).collect();
            assert!(crossing_check(&sep.boundary, &inner, &outer), "seed {seed}");
            let bound = balance_bound(50, 3);
            assert!(inner.len() <= bound && outer.len() <= bound);
        }
    }

    #[test]
    fn deterministic_given_seed() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let pts: Vec<Point> = (0..30).map(|_| pt(&[rng.gen::<f64>(), rng.gen::<f64>()])).collect();
        let a = voronoi_separator(&pts, 7).unwrap();
        let b = voronoi_separator(&pts, 7).unwrap();
        assert_eq!(a.inner, b.inner);
        assert_eq!(a.outer, b.outer);
        assert_eq!(a.boundary.len(), b.boundary.len());
        for (x, y) in a.boundary.iter().zip(&b.boundary) {
            assert_eq!(x, y);
        }
    }
}
