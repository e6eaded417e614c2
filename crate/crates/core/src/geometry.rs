//! Core numeric types: points, balls, metrics, and minimum enclosing balls.

use thiserror::Error;

/// Relative tolerance used by every geometric predicate that compares distances.
pub const REL_TOL: f64 = 1e-9;

/// Dimension above which `meb` switches from the exact Welzl computation to
/// the iterative core-set approximation.
pub const EXACT_MEB_MAX_DIM: usize = 16;

/// Relative accuracy of the approximate MEB used above [`EXACT_MEB_MAX_DIM`].
pub const APPROX_MEB_EPS: f64 = 1e-6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("point has non-finite coordinate at position {0}")]
    NonFinite(usize),
    #[error("empty point set")]
    EmptyPointSet,
    #[error("distance matrix is not square: {rows} rows, {cols} columns in row {row}")]
    MatrixNotSquare { rows: usize, cols: usize, row: usize },
    #[error("distance matrix violates {property} at ({i},{j})")]
    MatrixInvalid { property: &'static str, i: usize, j: usize },
}

/// A point in Euclidean space. Coordinates are always finite.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    coords: Vec<f64>,
}

impl Point {
    /// Build a point, asserting every coordinate is finite.
    pub fn new(coords: Vec<f64>) -> Self {
        assert!(
            coords.iter().all(|c| c.is_finite()),
            "point coordinates must be finite"
        );
        Self { coords }
    }

    /// Fallible constructor for data coming from files or user input.
    pub fn try_new(coords: Vec<f64>) -> Result<Self, GeometryError> {
        if let Some(i) = coords.iter().position(|c| !c.is_finite()) {
            return Err(GeometryError::NonFinite(i));
        }
        Ok(Self { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Euclidean distance. Panics if dimensions differ.
    pub fn distance(&self, other: &Point) -> f64 {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    /// Smallest distance from `self` to any point of `set`, or `f64::INFINITY`
    /// for an empty set.
    pub fn distance_to_set(&self, set: &[Point]) -> f64 {
        set.iter()
            .map(|p| self.distance(p))
            .fold(f64::INFINITY, f64::min)
    }

    /// Coordinate-wise scaling, used when renormalising instances to a probe radius.
    pub fn scaled(&self, factor: f64) -> Point {
        Point::new(self.coords.iter().map(|c| c * factor).collect())
    }

    /// Total order on coordinates, used for deterministic sorting and dedup.
    pub fn lex_cmp(&self, other: &Point) -> std::cmp::Ordering {
        for (a, b) in self.coords.iter().zip(&other.coords) {
            match a.total_cmp(b) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.dim().cmp(&other.dim())
    }
}

/// A ball: center plus nonnegative radius.
#[derive(Debug, Clone, PartialEq)]
pub struct Ball {
    pub center: Point,
    pub radius: f64,
}

impl Ball {
    pub fn new(center: Point, radius: f64) -> Self {
        assert!(radius >= 0.0 && radius.is_finite(), "radius must be finite and >= 0");
        Self { center, radius }
    }

    /// Containment with the module-wide relative tolerance.
    pub fn contains(&self, p: &Point) -> bool {
        self.center.distance(p) <= self.radius + REL_TOL * (1.0 + self.radius)
    }
}

/// Ground-set metric: either Euclidean over an explicit point list, or an
/// explicit symmetric distance matrix.
#[derive(Debug, Clone, PartialEq)]
pub enum Metric {
    Euclidean(Vec<Point>),
    Matrix(DistanceMatrix),
}

impl Metric {
    pub fn len(&self) -> usize {
        match self {
            Metric::Euclidean(pts) => pts.len(),
            Metric::Matrix(m) => m.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Distance between ground-set elements `a` and `b`. Panics if an index is
    /// out of range.
    pub fn distance(&self, a: usize, b: usize) -> f64 {
        match self {
            Metric::Euclidean(pts) => pts[a].distance(&pts[b]),
            Metric::Matrix(m) => m.get(a, b),
        }
    }

    /// The point list when Euclidean, for solvers that need coordinates.
    pub fn points(&self) -> Option<&[Point]> {
        match self {
            Metric::Euclidean(pts) => Some(pts),
            Metric::Matrix(_) => None,
        }
    }
}

/// A validated symmetric nonnegative matrix with zero diagonal satisfying the
/// triangle inequality within an additive `1e-9` tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl DistanceMatrix {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self, GeometryError> {
        let n = rows.len();
        if n == 0 {
            return Err(GeometryError::EmptyPointSet);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GeometryError::MatrixNotSquare { rows: n, cols: row.len(), row: i });
            }
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in &rows {
            entries.extend_from_slice(row);
        }
        let m = Self { n, entries };
        for i in 0..n {
            if m.get(i, i) != 0.0 {
                return Err(GeometryError::MatrixInvalid { property: "zero diagonal", i, j: i });
            }
            for j in 0..n {
                let d = m.get(i, j);
                if !d.is_finite() || d < 0.0 {
                    return Err(GeometryError::MatrixInvalid { property: "nonnegative finite entries", i, j });
                }
                if (d - m.get(j, i)).abs() > 1e-9 {
                    return Err(GeometryError::MatrixInvalid { property: "symmetry", i, j });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    if m.get(i, j) > m.get(i, l) + m.get(l, j) + 1e-9 {
                        return Err(GeometryError::MatrixInvalid { property: "triangle inequality", i, j });
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(i < self.n && j < self.n, "index out of range");
        self.entries[i * self.n + j]
    }
}

/// Minimum enclosing ball of a nonempty point set.
///
/// Exact move-to-front Welzl computation for dimension up to
/// [`EXACT_MEB_MAX_DIM`]; above that, an iterative core-set scheme that is
/// within a `(1 + 1e-6)` factor of optimal. Output is deterministic for a
/// fixed input order.
pub fn meb(points: &[Point]) -> Result<Ball, GeometryError> {
    if points.is_empty() {
        return Err(GeometryError::EmptyPointSet);
    }
    let dim = points[0].dim();
    debug_assert!(points.iter().all(|p| p.dim() == dim));
    if dim <= EXACT_MEB_MAX_DIM {
        Ok(welzl_meb(points))
    } else {
        Ok(coreset_meb(points))
    }
}

/// Checks the enclosing-ball distance lower bound: for `z` at distance `K`
/// from the MEB center of `T`, some point of `T` is at distance at least
/// `sqrt(r^2 + K^2)` from `z`.
pub fn meb_distance_lower_bound_check(t: &[Point], z: &Point) -> Result<bool, GeometryError> {
    let ball = meb(t)?;
    let k = z.distance(&ball.center);
    let bound = (ball.radius * ball.radius + k * k).sqrt();
    let max_dist = t
        .iter()
        .map(|p| z.distance(p))
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(max_dist >= bound - REL_TOL * (1.0 + bound))
}

fn welzl_meb(points: &[Point]) -> Ball {
    let mut order: Vec<usize> = (0..points.len()).collect();
    let mut support: Vec<usize> = Vec::new();
    let n = order.len();
    mtf_ball(points, &mut order, n, &mut support)
}

/// Move-to-front Welzl recursion over `order[..end]` with the current boundary
/// support set.
fn mtf_ball(points: &[Point], order: &mut Vec<usize>, end: usize, support: &mut Vec<usize>) -> Ball {
    let dim = points[0].dim();
    let mut ball = ball_from_support(points, support);
    if support.len() == dim + 1 {
        return ball;
    }
    let mut i = 0;
    while i < end {
        let idx = order[i];
        if !contains_loose(&ball, &points[idx]) {
            support.push(idx);
            ball = mtf_ball(points, order, i, support);
            support.pop();
            order[..=i].rotate_right(1);
        }
        i += 1;
    }
    ball
}

fn contains_loose(ball: &Ball, p: &Point) -> bool {
    if ball.radius < 0.0 {
        return false;
    }
    ball.center.distance(p) <= ball.radius * (1.0 + REL_TOL) + REL_TOL
}

/// Smallest ball having all support points on its boundary (circumsphere of
/// the support, restricted to the support's affine hull). Affinely dependent
/// supports are resolved by orthogonalising the difference vectors and
/// dropping directions that have no independent component, which amounts to
/// solving in the affine hull.
fn ball_from_support(points: &[Point], support: &[usize]) -> Ball {
    match support.len() {
        0 => Ball { center: points[0].clone(), radius: -1.0 },
        1 => Ball { center: points[support[0]].clone(), radius: 0.0 },
        _ => {
            let base = points[support[0]].coords();
            let dim = base.len();
            // Gram-Schmidt over the difference vectors; `q` holds the
            // orthonormal basis of the support's affine hull.
            let mut q: Vec<Vec<f64>> = Vec::new();
            let mut center: Vec<f64> = base.to_vec();
            let scale: f64 = support
                .iter()
                .map(|&s| points[s].distance(&points[support[0]]))
                .fold(0.0, f64::max)
                .max(1.0);
            for &s in &support[1..] {
                let v: Vec<f64> = points[s]
                    .coords()
                    .iter()
                    .zip(base)
                    .map(|(a, b)| a - b)
                    .collect();
                let mut w = v.clone();
                for basis in &q {
                    let proj: f64 = dot(&w, basis);
                    for (wi, bi) in w.iter_mut().zip(basis) {
                        *wi -= proj * bi;
                    }
                }
                let norm = dot(&w, &w).sqrt();
                if norm <= scale * 1e-12 {
                    // Affinely dependent on the previous support points; the
                    // equidistance constraint is already implied within the hull.
                    continue;
                }
                for wi in &mut w {
                    *wi /= norm;
                }
                // Equidistance to `base` and to point `s` pins the center's
                // coordinate along the new basis direction: 2 (c - base) . v = |v|^2.
                // Moving along `w` leaves the already-satisfied constraints intact.
                let c_rel: Vec<f64> = center.iter().zip(base).map(|(a, b)| a - b).collect();
                let shift = (dot(&v, &v) / 2.0 - dot(&c_rel, &v)) / dot(&v, &w);
                for (ci, wi) in center.iter_mut().zip(&w) {
                    *ci += shift * wi;
                }
                q.push(w);
                if q.len() == dim {
                    break;
                }
            }
            let center = Point::new(center);
            let radius = support
                .iter()
                .map(|&s| center.distance(&points[s]))
                .fold(0.0, f64::max);
            Ball { center, radius }
        }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Core-set iteration for high dimensions: grow a witness subset, solve it
/// exactly, and stop when the farthest point is within `(1 + eps)` of the
/// witness radius.
fn coreset_meb(points: &[Point]) -> Ball {
    let mut core: Vec<Point> = vec![points[0].clone()];
    let max_rounds = 64 + points.len();
    let mut best: Option<Ball> = None;
    for _ in 0..max_rounds {
        let inner = welzl_meb(&core);
        let (far_idx, far_dist) = points
            .iter()
            .enumerate()
            .map(|(i, p)| (i, inner.center.distance(p)))
            .fold((0, f64::NEG_INFINITY), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        let achieved = Ball { center: inner.center.clone(), radius: far_dist };
        if best.as_ref().map_or(true, |b| achieved.radius < b.radius) {
            best = Some(achieved.clone());
        }
        if far_dist <= inner.radius * (1.0 + APPROX_MEB_EPS) + REL_TOL {
            return achieved;
        }
        core.push(points[far_idx].clone());
    }
    best.expect("at least one round ran")
}
