//! Greedy separation filters and grid nets of balls.
//!
//! These are the input-size reductions used by the supplier solver: clients
//! and facilities are thinned to pairwise-separated subsets, instances whose
//! filtered size exceeds the packing bound are declared infeasible, and the
//! k-center reduction replaces the continuous candidate space by grid nets.

use crate::geometry::Point;

/// Result of a greedy separation pass.
#[derive(Debug, Clone, PartialEq)]
pub struct FilterOutput {
    /// Kept points, pairwise more than the separation threshold apart.
    pub kept: Vec<Point>,
    pub dropped_count: usize,
}

/// Greedy thinning: process points in input order, keep a point iff it is
/// farther than `eps` from everything kept so far. Every dropped point ends up
/// within `eps` of some kept point.
pub fn filter_clients(clients: &[Point], eps: f64) -> FilterOutput {
    assert!(eps > 0.0);
    let mut kept: Vec<Point> = Vec::new();
    for p in clients {
        if p.distance_to_set(&kept) > eps {
            kept.push(p.clone());
        }
    }
    FilterOutput { dropped_count: clients.len() - kept.len(), kept }
}

/// Facility thinning: keep a facility iff it is farther than `eps` from the
/// kept facilities and within `1 + eps` of the filtered clients.
pub fn filter_facilities(facilities: &[Point], filtered_clients: &[Point], eps: f64) -> FilterOutput {
    assert!(eps > 0.0);
    let mut kept: Vec<Point> = Vec::new();
    for f in facilities {
        if f.distance_to_set(&kept) > eps && f.distance_to_set(filtered_clients) <= 1.0 + eps {
            kept.push(f.clone());
        }
    }
    FilterOutput { dropped_count: facilities.len() - kept.len(), kept }
}

/// Packing bound on the size of a filtered set: an `eps`-separated set that a
/// feasible solution must cover has at most `k * ceil((1 + 4/eps)^d)` points.
/// Returns false when `kept_size` exceeds that bound, which certifies a no
/// instance for the current probe radius.
pub fn size_guard(kept_size: usize, k: usize, eps: f64, dim: usize) -> bool {
    assert!(k >= 1 && eps > 0.0 && eps <= 1.0 && dim >= 1);
    let per_center = (1.0 + 4.0 / eps).powi(dim as i32).ceil();
    (kept_size as f64) <= (k as f64) * per_center
}

/// Grid net of a ball: every point of `B(center, radius)` is within `eps` of
/// the returned set.
///
/// The construction is a cubic grid of spacing `eps / sqrt(d)` anchored at the
/// center. The per-axis index range is chosen so that each coordinate of a
/// ball point is within half a spacing of the grid, which bounds the net size
/// by `ceil(1 + 2 * radius * sqrt(d) / eps)^d`; grid points farther than
/// `radius + eps/2` from the center can never be the nearest witness and are
/// dropped.
pub fn ball_epsilon_net(center: &Point, radius: f64, eps: f64) -> Vec<Point> {
    assert!(radius > 0.0 && eps > 0.0);
    let dim = center.dim();
    let spacing = eps / (dim as f64).sqrt();
    let reach = (radius / spacing - 0.5).ceil().max(0.0) as i64;
    let clip = radius + eps / 2.0;
    let mut net = Vec::new();
    let mut index = vec![-reach; dim];
    'outer: loop {
        let coords: Vec<f64> = center
            .coords()
            .iter()
            .zip(&index)
            .map(|(c, i)| c + (*i as f64) * spacing)
            .collect();
        let candidate = Point::new(coords);
        if candidate.distance(center) <= clip {
            net.push(candidate);
        }
        for axis in 0..dim {
            if index[axis] < reach {
                index[axis] += 1;
                continue 'outer;
            }
            index[axis] = -reach;
        }
        break;
    }
    net
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pt(coords: &[f64]) -> Point {
        Point::new(coords.to_vec())
    }

    #[test]
    fn filter_clients_hand_trace() {
        let c = vec![pt(&[0.0]), pt(&[0.05]), pt(&[0.2]), pt(&[0.3])];
        let out = filter_clients(&c, 0.1);
        assert_eq!(out.kept, vec![pt(&[0.0]), pt(&[0.2])]);
        assert_eq!(out.dropped_count, 2);
    }

    #[test]
    fn filter_clients_singleton() {
        let c = vec![pt(&[7.0, 7.0])];
        let out = filter_clients(&c, 0.5);
        assert_eq!(out.kept, c);
    }

    #[test]
    fn filter_clients_duplicates() {
        let c = vec![pt(&[1.0, 1.0]); 100];
        let out = filter_clients(&c, 0.5);
        assert_eq!(out.kept, vec![pt(&[1.0, 1.0])]);
        assert_eq!(out.dropped_count, 99);
    }

    #[test]
    fn filter_clients_idempotent() {
        let c = vec![pt(&[0.0]), pt(&[0.05]), pt(&[0.2]), pt(&[0.3]), pt(&[0.9])];
        let once = filter_clients(&c, 0.1);
        let twice = filter_clients(&once.kept, 0.1);
        assert_eq!(once.kept, twice.kept);
        assert_eq!(twice.dropped_count, 0);
    }

    #[test]
    fn filter_facilities_reach() {
        let f = vec![pt(&[0.0, 0.0]), pt(&[5.0, 5.0])];
        let c = vec![pt(&[0.0, 0.5])];
        let out = filter_facilities(&f, &c, 0.1);
        assert_eq!(out.kept, vec![pt(&[0.0, 0.0])]);
    }

    #[test]
    fn filter_facilities_empty() {
        let out = filter_facilities(&[], &[pt(&[0.0])], 0.1);
        assert!(out.kept.is_empty());
    }

    #[test]
    fn filter_facilities_near_duplicate() {
        let f = vec![pt(&[0.0, 0.0]), pt(&[0.0, 0.05])];
        let c = vec![pt(&[0.0, 1.0])];
        let out = filter_facilities(&f, &c, 0.1);
        assert_eq!(out.kept, vec![pt(&[0.0, 0.0])]);
    }

    #[test]
    fn size_guard_packing_bound() {
        // (1 + 4/1)^2 = 25
        assert!(size_guard(1, 1, 1.0, 2));
        assert!(size_guard(25, 1, 1.0, 2));
        assert!(!size_guard(26, 1, 1.0, 2));
        assert!(size_guard(0, 3, 0.2, 4));
    }

    #[test]
    fn net_single_cell_when_eps_huge() {
        let net = ball_epsilon_net(&pt(&[0.0, 0.0]), 1.0, 10.0);
        assert_eq!(net, vec![pt(&[0.0, 0.0])]);
    }

    #[test]
    fn net_one_dimensional_grid() {
        let net = ball_epsilon_net(&pt(&[0.0]), 1.0, 0.5);
        let want = [-1.0, -0.5, 0.0, 0.5, 1.0];
        for w in want {
            assert!(
                net.iter().any(|p| (p.coords()[0] - w).abs() < 1e-12),
                "missing grid point {w}"
            );
        }
        assert!(net.len() <= 5); // ceil(1 + 2*1*1/0.5) = 5
    }

    #[test]
    fn net_covering_by_sampling() {
        let center = pt(&[0.0, 0.0]);
        let net = ball_epsilon_net(&center, 1.0, 1.0);
        let bound = (1.0 + 2.0 * (2.0_f64).sqrt()).ceil().powi(2);
        assert!((net.len() as f64) <= bound, "net size {} > {}", net.len(), bound);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10_000 {
            // uniform point in the unit disk by rejection
            let q = loop {
                let x: f64 = rng.gen_range(-1.0..1.0);
                let y: f64 = rng.gen_range(-1.0..1.0);
                if x * x + y * y <= 1.0 {
                    break pt(&[x, y]);
                }
            };
            assert!(q.distance_to_set(&net) <= 1.0 + 1e-9);
        }
    }
}
