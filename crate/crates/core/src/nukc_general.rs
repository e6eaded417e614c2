//! Non-uniform k-center in general metrics: instance types and the
//! branch-over-radius-classes cover search that yields a 3-approximation
//! (2-approximation when clients and facilities coincide).

use thiserror::Error;

use crate::geometry::{Metric, Point, REL_TOL};
use crate::limits::{Interrupt, SearchLimits};

#[derive(Debug, Error, PartialEq)]
pub enum NUkCError {
    #[error("radii must be strictly decreasing and positive")]
    BadRadii,
    #[error("counts must be positive and aligned with radii")]
    BadCounts,
    #[error("client set must be nonempty")]
    EmptyClients,
    #[error("facility set must be nonempty")]
    EmptyFacilities,
    #[error("ground-set index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("continuous instances require a Euclidean metric")]
    ContinuousNeedsEuclidean,
}

/// A non-uniform k-center instance.
///
/// `clients` and `facilities` index into the metric's ground set. When
/// `continuous` is set the facility list is ignored by the Euclidean scheme,
/// which may place centers anywhere in space.
#[derive(Debug, Clone, PartialEq)]
pub struct NUkCInstance {
    pub metric: Metric,
    pub clients: Vec<usize>,
    pub facilities: Vec<usize>,
    pub cf_equal: bool,
    pub continuous: bool,
    /// Strictly decreasing positive radii, one per class.
    pub radii: Vec<f64>,
    /// Positive ball budget per class; the total is `k`.
    pub counts: Vec<usize>,
}

impl NUkCInstance {
    pub fn discrete(
        metric: Metric,
        clients: Vec<usize>,
        facilities: Vec<usize>,
        radii: Vec<f64>,
        counts: Vec<usize>,
    ) -> Result<Self, NUkCError> {
        let cf_equal = clients == facilities;
        let inst = Self { metric, clients, facilities, cf_equal, continuous: false, radii, counts };
        inst.validate()?;
        Ok(inst)
    }

    /// Euclidean instance whose centers may be placed anywhere in space.
    pub fn euclidean_continuous(
        points: Vec<Point>,
        radii: Vec<f64>,
        counts: Vec<usize>,
    ) -> Result<Self, NUkCError> {
        let ids: Vec<usize> = (0..points.len()).collect();
        let inst = Self {
            metric: Metric::Euclidean(points),
            clients: ids.clone(),
            facilities: ids,
            cf_equal: true,
            continuous: true,
            radii,
            counts,
        };
        inst.validate()?;
        Ok(inst)
    }

    fn validate(&self) -> Result<(), NUkCError> {
        if self.radii.is_empty()
            || self.radii.iter().any(|&r| !(r > 0.0) || !r.is_finite())
            || self.radii.windows(2).any(|w| w[0] <= w[1])
        {
            return Err(NUkCError::BadRadii);
        }
        if self.counts.len() != self.radii.len() || self.counts.iter().any(|&c| c == 0) {
            return Err(NUkCError::BadCounts);
        }
        if self.clients.is_empty() {
            return Err(NUkCError::EmptyClients);
        }
        if self.facilities.is_empty() {
            return Err(NUkCError::EmptyFacilities);
        }
        let n = self.metric.len();
        for &i in self.clients.iter().chain(&self.facilities) {
            if i >= n {
                return Err(NUkCError::IndexOutOfRange(i));
            }
        }
        if self.continuous && self.metric.points().is_none() {
            return Err(NUkCError::ContinuousNeedsEuclidean);
        }
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn class_count(&self) -> usize {
        self.radii.len()
    }

    /// Client coordinates for Euclidean instances.
    pub fn client_points(&self) -> Option<Vec<Point>> {
        self.metric
            .points()
            .map(|pts| self.clients.iter().map(|&i| pts[i].clone()).collect())
    }
}

/// A ball center: either a ground-set facility or a free point in space.
#[derive(Debug, Clone, PartialEq)]
pub enum BallCenter {
    Facility(usize),
    Free(Point),
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlacedBall {
    pub center: BallCenter,
    pub radius_index: usize,
}

/// A cover: the achieved dilation is always recomputed from the balls, never
/// trusted from the search.
#[derive(Debug, Clone, PartialEq)]
pub struct NUkCSolution {
    pub balls: Vec<PlacedBall>,
    pub dilation: f64,
}

impl NUkCSolution {
    /// Recompute the smallest dilation at which these balls cover all clients:
    /// the max over clients of the min over balls of `dist / r_class`.
    pub fn recompute_dilation(balls: &[PlacedBall], inst: &NUkCInstance) -> f64 {
        let points = inst.metric.points();
        inst.clients
            .iter()
            .map(|&c| {
                balls
                    .iter()
                    .map(|ball| {
                        let d = match &ball.center {
                            BallCenter::Facility(f) => inst.metric.distance(c, *f),
                            BallCenter::Free(p) => {
                                points.expect("free centers imply a Euclidean metric")[c].distance(p)
                            }
                        };
                        d / inst.radii[ball.radius_index]
                    })
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    }

    /// Per-class ball counts stay within the instance budgets.
    pub fn respects_budgets(&self, inst: &NUkCInstance) -> bool {
        let mut used = vec![0usize; inst.class_count()];
        for ball in &self.balls {
            if ball.radius_index >= used.len() {
                return false;
            }
            used[ball.radius_index] += 1;
        }
        used.iter().zip(&inst.counts).all(|(u, c)| u <= c)
    }
}

/// Decision procedure: can all clients be covered by balls of radius
/// `factor * alpha * r_i` (factor 3, or 2 when clients equal facilities),
/// respecting the per-class budgets?
///
/// Each step picks the lowest-index uncovered client and branches over the
/// radius class of the optimal ball assumed to contain it, placing the ball at
/// the client's nearest facility (at the client itself when C = F). Branches
/// whose ball would not even cover the chosen client are wrong guesses and are
/// pruned.
pub fn nukc_cover_decision(inst: &NUkCInstance, alpha: f64) -> Option<NUkCSolution> {
    let mut nodes = 0;
    nukc_cover_decision_bounded(inst, alpha, SearchLimits::UNBOUNDED, &mut nodes)
        .expect("unbounded search cannot be interrupted")
}

pub fn nukc_cover_decision_bounded(
    inst: &NUkCInstance,
    alpha: f64,
    limits: SearchLimits,
    nodes: &mut u64,
) -> Result<Option<NUkCSolution>, Interrupt> {
    assert!(alpha >= 0.0 && alpha.is_finite());
    let factor = if inst.cf_equal { 2.0 } else { 3.0 };
    let nearest: Vec<usize> = inst
        .clients
        .iter()
        .map(|&c| {
            if inst.cf_equal {
                c
            } else {
                *inst
                    .facilities
                    .iter()
                    .min_by(|&&a, &&b| {
                        inst.metric
                            .distance(c, a)
                            .total_cmp(&inst.metric.distance(c, b))
                    })
                    .expect("nonempty facilities")
            }
        })
        .collect();

    let k = inst.k();
    let mut covered = vec![false; inst.clients.len()];
    let mut budgets = inst.counts.clone();
    let mut balls: Vec<PlacedBall> = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        inst: &NUkCInstance,
        alpha: f64,
        factor: f64,
        nearest: &[usize],
        k: usize,
        covered: &mut Vec<bool>,
        budgets: &mut Vec<usize>,
        balls: &mut Vec<PlacedBall>,
        limits: SearchLimits,
        nodes: &mut u64,
    ) -> Result<bool, Interrupt> {
        limits.tick(nodes)?;
        let next = covered.iter().position(|&c| !c);
        let Some(target) = next else {
            return Ok(true);
        };
        if balls.len() == k {
            return Ok(false);
        }
        let center = nearest[target];
        // Larger radii first: they cover more, so feasible branches are found
        // sooner. Class order is radius-descending by construction.
        for class in 0..inst.class_count() {
            if budgets[class] == 0 {
                continue;
            }
            let reach = factor * alpha * inst.radii[class];
            let cover_limit = reach + REL_TOL * (1.0 + reach);
            if inst.metric.distance(inst.clients[target], center) > cover_limit {
                continue;
            }
            let newly: Vec<usize> = inst
                .clients
                .iter()
                .enumerate()
                .filter(|&(i, &c)| !covered[i] && inst.metric.distance(c, center) <= cover_limit)
                .map(|(i, _)| i)
                .collect();
            for &i in &newly {
                covered[i] = true;
            }
            budgets[class] -= 1;
            balls.push(PlacedBall { center: BallCenter::Facility(center), radius_index: class });
            if dfs(inst, alpha, factor, nearest, k, covered, budgets, balls, limits, nodes)? {
                return Ok(true);
            }
            balls.pop();
            budgets[class] += 1;
            for &i in &newly {
                covered[i] = false;
            }
        }
        Ok(false)
    }

    if dfs(inst, alpha, factor, &nearest, k, &mut covered, &mut budgets, &mut balls, limits, nodes)? {
        let dilation = NUkCSolution::recompute_dilation(&balls, inst);
        Ok(Some(NUkCSolution { balls, dilation }))
    } else {
        Ok(None)
    }
}

/// 3-approximation (2 when C = F): binary search over the finite candidate
/// dilations `dist(c, f) / r_i`. The optimum is always one of these ratios
/// because some ball is tight at optimality, and the decision succeeds at
/// every candidate at or above the optimum, so the boundary found by the
/// search is at most the optimum.
pub fn solve_nukc_general(inst: &NUkCInstance) -> NUkCSolution {
    let mut nodes = 0;
    solve_nukc_general_bounded(inst, SearchLimits::UNBOUNDED, &mut nodes)
        .expect("unbounded search cannot be interrupted")
}

pub fn solve_nukc_general_bounded(
    inst: &NUkCInstance,
    limits: SearchLimits,
    nodes: &mut u64,
) -> Result<NUkCSolution, Interrupt> {
    let mut candidates: Vec<f64> = Vec::new();
    for &c in &inst.clients {
        for &f in &inst.facilities {
            let d = inst.metric.distance(c, f);
            for &r in &inst.radii {
                candidates.push(d / r);
            }
        }
    }
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();

    let top = nukc_cover_decision_bounded(inst, *candidates.last().expect("nonempty candidates"), limits, nodes)?
        .expect("decision must succeed at the largest candidate");
    let mut hi = candidates.len() - 1;
    let mut hi_solution = top;
    let mut lo: isize = -1;
    while lo + 1 < hi as isize {
        let mid = ((lo + 1 + hi as isize) / 2) as usize;
        match nukc_cover_decision_bounded(inst, candidates[mid], limits, nodes)? {
            Some(sol) => {
                hi = mid;
                hi_solution = sol;
            }
            None => lo = mid as isize,
        }
    }
    Ok(hi_solution)
}
