//! The (1+eps) scheme for Euclidean k-supplier, and the grid-net reduction
//! that solves k-center with it.
//!
//! The outer layer reduces approximation to feasibility probes: from a
//! 3-approximate bracket, a geometric bisection probes radii; each probe
//! rescales the instance so the target cost is 1, thins it with the greedy
//! filters, and runs the recursive search. The search separates the point set,
//! guesses which solution centers sit near the boundary, removes the clients
//! they serve and recurses independently on the two sides. A probe failure is
//! a certificate that no solution of cost at most the probe radius exists.

use std::time::{Duration, Instant};

use itertools::Itertools;
use thiserror::Error;

use crate::filtering::{ball_epsilon_net, filter_clients, filter_facilities, size_guard};
use crate::geometry::{Point, REL_TOL};
use crate::separator::{voronoi_separator_with, SeparatorConfig};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SupplierError {
    #[error("instance has {have} facilities but k = {need}")]
    TooFewFacilities { have: usize, need: usize },
    #[error("client set must be nonempty")]
    EmptyClients,
    #[error("clients and facilities must share one dimension")]
    DimensionMismatch,
    #[error("branch budget exhausted")]
    BranchBudget,
    #[error("deadline exceeded")]
    Timeout,
}

/// A k-supplier instance: clients, candidate centers, and the center budget.
#[derive(Debug, Clone, PartialEq)]
pub struct KSupplierInstance {
    pub clients: Vec<Point>,
    pub facilities: Vec<Point>,
    pub k: usize,
}

impl KSupplierInstance {
    pub fn new(clients: Vec<Point>, facilities: Vec<Point>, k: usize) -> Result<Self, SupplierError> {
        if clients.is_empty() {
            return Err(SupplierError::EmptyClients);
        }
        assert!(k >= 1);
        let dim = clients[0].dim();
        if clients.iter().chain(&facilities).any(|p| p.dim() != dim) {
            return Err(SupplierError::DimensionMismatch);
        }
        Ok(Self { clients, facilities, k })
    }

    pub fn dim(&self) -> usize {
        self.clients[0].dim()
    }
}

/// Search counters reported with every solve.
#[derive(Debug, Clone, Default)]
pub struct SolveStats {
    /// Feasibility probes issued by the binary search.
    pub probes: usize,
    /// Boundary guesses enumerated across all search nodes.
    pub guesses: u64,
    /// Search nodes visited (recursion plus base cases).
    pub nodes: u64,
    pub max_depth: usize,
    pub wall: Duration,
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    pub centers: Vec<Point>,
    /// Max client distance to the centers, recomputed from scratch.
    pub cost: f64,
    pub feasible: bool,
    pub stats: SolveStats,
}

impl SolveReport {
    pub fn evaluated(centers: Vec<Point>, clients: &[Point], stats: SolveStats) -> Self {
        let cost = clients
            .iter()
            .map(|c| c.distance_to_set(&centers))
            .fold(0.0, f64::max);
        Self { centers, cost, feasible: true, stats }
    }
}

/// Knobs for the recursive search. Defaults implement the documented
/// behavior; tests shrink the base-case thresholds to force recursion.
#[derive(Debug, Clone)]
pub struct SolverConfig {
    /// Below this many facilities the node is solved exhaustively.
    pub base_facility_cutoff: usize,
    /// Below this many clients the node is solved exhaustively.
    pub base_client_cutoff: usize,
    /// Client-count limit for the bitmask set-cover engine.
    pub mask_dp_client_limit: usize,
    /// Distinct-mask limit for the bitmask engine.
    pub mask_dp_mask_limit: usize,
    /// Abort knobs for the exponential search; `None` means unbounded.
    pub max_nodes: Option<u64>,
    pub deadline: Option<Instant>,
    pub separator: SeparatorConfig,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            base_facility_cutoff: 12,
            base_client_cutoff: 4,
            mask_dp_client_limit: 16,
            mask_dp_mask_limit: 4096,
            max_nodes: None,
            deadline: None,
            separator: SeparatorConfig::default(),
        }
    }
}

impl SolverConfig {
    /// Budget below which a node is brute-forced outright: `d ln(1/eps)`.
    pub fn base_k_threshold(dim: usize, eps: f64) -> usize {
        ((dim as f64) * (1.0 / eps).ln()).ceil().max(1.0) as usize
    }
}

/// 3-approximation for k-supplier: guess the optimal cost among the client
/// to facility distances; at a correct guess R, repeatedly serving the lowest
/// uncovered client through any facility within R and discharging everything
/// within 2R opens at most k centers, each covering its clients within 3R.
pub fn hs_3approx(inst: &KSupplierInstance) -> Result<SolveReport, SupplierError> {
    if inst.facilities.len() < inst.k {
        return Err(SupplierError::TooFewFacilities { have: inst.facilities.len(), need: inst.k });
    }
    let start = Instant::now();
    let mut candidates: Vec<f64> = inst
        .clients
        .iter()
        .cartesian_product(&inst.facilities)
        .map(|(c, f)| c.distance(f))
        .collect();
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();

    let greedy = |radius: f64| -> Option<Vec<usize>> {
        let mut covered = vec![false; inst.clients.len()];
        let mut opened: Vec<usize> = Vec::new();
        while let Some(p) = covered.iter().position(|&c| !c) {
            if opened.len() == inst.k {
                return None;
            }
            let f = inst
                .facilities
                .iter()
                .position(|f| inst.clients[p].distance(f) <= radius)?;
            opened.push(f);
            for (i, c) in inst.clients.iter().enumerate() {
                if !covered[i] && c.distance(&inst.clients[p]) <= 2.0 * radius {
                    covered[i] = true;
                }
            }
        }
        Some(opened)
    };

    // The greedy succeeds at every radius at or above the optimum (selected
    // clients are pairwise more than 2R apart, so the optimum serves them with
    // distinct centers), so the boundary found here is at most the optimum.
    let mut lo: isize = -1;
    let mut hi = candidates.len() - 1;
    let mut best = greedy(candidates[hi]).expect("greedy succeeds at the largest distance");
    while lo + 1 < hi as isize {
        let mid = ((lo + 1 + hi as isize) / 2) as usize;
        match greedy(candidates[mid]) {
            Some(opened) => {
                hi = mid;
                best = opened;
            }
            None => lo = mid as isize,
        }
    }
    let centers: Vec<Point> = best.into_iter().map(|f| inst.facilities[f].clone()).collect();
    Ok(SolveReport::evaluated(
        centers,
        &inst.clients,
        SolveStats { wall: start.elapsed(), ..SolveStats::default() },
    ))
}

fn mix_seed(seed: u64, salt: u64) -> u64 {
    let mut z = seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn is_covered(distance: f64, reach: f64) -> bool {
    distance <= reach + REL_TOL * (1.0 + reach)
}

struct SearchCtx<'a> {
    /// Coverage radius in scaled units: 1 + eps.
    cover: f64,
    /// Facilities this close to the boundary are guess candidates: 2(1 + eps).
    guess_reach: f64,
    base_k: usize,
    cfg: &'a SolverConfig,
    stats: &'a mut SolveStats,
}

impl SearchCtx<'_> {
    fn enter_node(&mut self, depth: usize) -> Result<(), SupplierError> {
        self.stats.nodes += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        self.check_limits()
    }

    fn check_limits(&mut self) -> Result<(), SupplierError> {
        if let Some(max) = self.cfg.max_nodes {
            if self.stats.nodes > max {
                return Err(SupplierError::BranchBudget);
            }
        }
        if let Some(deadline) = self.cfg.deadline {
            if (self.stats.nodes + self.stats.guesses) % 256 == 0 && Instant::now() > deadline {
                return Err(SupplierError::Timeout);
            }
        }
        Ok(())
    }
}

/// Feasibility core in scaled units (target cost 1): either returns at most
/// `k` facilities covering every client within `1 + eps`, or `None`, and
/// `None` is only returned when no solution of cost at most 1 exists.
///
/// Inputs are assumed pre-filtered (pairwise separation more than eps within
/// each of the client and facility lists).
pub fn feasibility_search(
    clients: &[Point],
    facilities: &[Point],
    k: usize,
    eps: f64,
    seed: u64,
) -> Option<Vec<Point>> {
    let mut stats = SolveStats::default();
    feasibility_search_with(clients, facilities, k, eps, seed, &SolverConfig::default(), &mut stats)
        .expect("unbounded search cannot be interrupted")
}

pub fn feasibility_search_with(
    clients: &[Point],
    facilities: &[Point],
    k: usize,
    eps: f64,
    seed: u64,
    cfg: &SolverConfig,
    stats: &mut SolveStats,
) -> Result<Option<Vec<Point>>, SupplierError> {
    assert!(eps > 0.0 && eps <= 1.0);
    if clients.is_empty() {
        return Ok(Some(Vec::new()));
    }
    let dim = clients[0].dim();
    let mut ctx = SearchCtx {
        cover: 1.0 + eps,
        guess_reach: 2.0 * (1.0 + eps),
        base_k: SolverConfig::base_k_threshold(dim, eps),
        cfg,
        stats,
    };
    search(&mut ctx, clients.to_vec(), facilities.to_vec(), k, seed, 0)
}

fn search(
    ctx: &mut SearchCtx,
    clients: Vec<Point>,
    facilities: Vec<Point>,
    k: usize,
    seed: u64,
    depth: usize,
) -> Result<Option<Vec<Point>>, SupplierError> {
    ctx.enter_node(depth)?;
    if clients.is_empty() {
        return Ok(Some(Vec::new()));
    }
    if facilities.is_empty() || k == 0 {
        return Ok(None);
    }
    if k <= ctx.base_k
        || facilities.len() <= ctx.cfg.base_facility_cutoff
        || clients.len() <= ctx.cfg.base_client_cutoff
    {
        return exhaustive_feasible(ctx, &clients, &facilities, k);
    }

    // Merge exactly coincident client/facility points so the separator sees
    // distinct points; each merged member remembers both roles.
    let mut members: Vec<(Point, Vec<usize>, Vec<usize>)> = Vec::new();
    {
        let mut order: Vec<(Point, bool, usize)> = clients
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, true, i))
            .chain(facilities.iter().cloned().enumerate().map(|(i, p)| (p, false, i)))
            .collect();
        order.sort_by(|a, b| a.0.lex_cmp(&b.0).then(b.1.cmp(&a.1)).then(a.2.cmp(&b.2)));
        for (p, is_client, idx) in order {
            let fresh = members.last().map_or(true, |(q, _, _)| *q != p);
            if fresh {
                members.push((p, Vec::new(), Vec::new()));
            }
            let slot = members.len() - 1;
            if is_client {
                members[slot].1.push(idx);
            } else {
                members[slot].2.push(idx);
            }
        }
    }
    let union_points: Vec<Point> = members.iter().map(|(p, _, _)| p.clone()).collect();

    let sep = match voronoi_separator_with(&union_points, mix_seed(seed, depth as u64), &ctx.cfg.separator) {
        Ok(sep) => sep,
        // The separator is probabilistically retried internally; if it still
        // fails, fall back to the exhaustive engine so the one-sided
        // guarantee is preserved.
        Err(_) => return exhaustive_feasible(ctx, &clients, &facilities, k),
    };

    let mut client_side = vec![false; clients.len()]; // true = inner
    let mut facility_side = vec![false; facilities.len()];
    for &m in &sep.inner {
        let (_, ref cs, ref fs) = members[m];
        for &c in cs {
            client_side[c] = true;
        }
        for &f in fs {
            facility_side[f] = true;
        }
    }

    // Guess candidates: facilities near the boundary, ordered by distance.
    let mut candidates: Vec<(f64, usize)> = facilities
        .iter()
        .enumerate()
        .filter_map(|(i, f)| {
            let d = f.distance_to_set(&sep.boundary);
            (d <= ctx.guess_reach).then_some((d, i))
        })
        .collect();
    candidates.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let candidate_ids: Vec<usize> = candidates.iter().map(|&(_, i)| i).collect();
    debug_assert!(candidates
        .iter()
        .all(|&(d, _)| d <= ctx.guess_reach * (1.0 + REL_TOL)));

    let max_guess = k.min(candidate_ids.len());
    for guess_size in 0..=max_guess {
        for combo in candidate_ids.iter().copied().combinations(guess_size) {
            ctx.stats.guesses += 1;
            ctx.check_limits()?;
            let guess: Vec<Point> = combo.iter().map(|&i| facilities[i].clone()).collect();
            let in_guess = |i: usize| combo.contains(&i);

            let mut side_clients: [Vec<Point>; 2] = [Vec::new(), Vec::new()];
            for (i, c) in clients.iter().enumerate() {
                if !is_covered(c.distance_to_set(&guess), ctx.cover) {
                    side_clients[client_side[i] as usize].push(c.clone());
                }
            }
            let mut side_facilities: [Vec<Point>; 2] = [Vec::new(), Vec::new()];
            for (i, f) in facilities.iter().enumerate() {
                if !in_guess(i) {
                    side_facilities[facility_side[i] as usize].push(f.clone());
                }
            }

            let budget = k - guess_size;
            if side_clients[0].is_empty() && side_clients[1].is_empty() {
                return Ok(Some(guess));
            }
            for first_budget in 0..=budget {
                let sub_first = search(
                    ctx,
                    side_clients[0].clone(),
                    side_facilities[0].clone(),
                    first_budget,
                    mix_seed(seed, 2 * depth as u64 + 1),
                    depth + 1,
                )?;
                let Some(sol_first) = sub_first else {
                    continue;
                };
                let sub_second = search(
                    ctx,
                    side_clients[1].clone(),
                    side_facilities[1].clone(),
                    budget - first_budget,
                    mix_seed(seed, 2 * depth as u64 + 2),
                    depth + 1,
                )?;
                if let Some(sol_second) = sub_second {
                    let mut all = guess;
                    all.extend(sol_first);
                    all.extend(sol_second);
                    return Ok(Some(all));
                }
            }
        }
    }
    Ok(None)
}

/// Exhaustive feasibility at a leaf: find at most `k` facilities covering all
/// clients within `cover`, or prove none exist.
fn exhaustive_feasible(
    ctx: &mut SearchCtx,
    clients: &[Point],
    facilities: &[Point],
    k: usize,
) -> Result<Option<Vec<Point>>, SupplierError> {
    if clients.len() <= ctx.cfg.mask_dp_client_limit {
        if let Some(result) = mask_cover(ctx, clients, facilities, k) {
            return Ok(result);
        }
    }
    // Subset scan, smallest guesses first.
    for size in 1..=k.min(facilities.len()) {
        for combo in (0..facilities.len()).combinations(size) {
            ctx.stats.guesses += 1;
            let chosen: Vec<Point> = combo.iter().map(|&i| facilities[i].clone()).collect();
            if clients
                .iter()
                .all(|c| is_covered(c.distance_to_set(&chosen), ctx.cover))
            {
                return Ok(Some(chosen));
            }
        }
    }
    Ok(None)
}

/// Set-cover over client bitmasks: exact min-ball-count DP when the distinct
/// coverage masks are few. Returns `None` when the mask table is too large
/// for this engine (not an infeasibility verdict).
fn mask_cover(
    ctx: &mut SearchCtx,
    clients: &[Point],
    facilities: &[Point],
    k: usize,
) -> Option<Option<Vec<Point>>> {
    let m = clients.len();
    let full: u32 = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    // First facility per distinct mask, in facility order.
    let mut masks: Vec<(u32, usize)> = Vec::new();
    let mut seen: std::collections::HashSet<u32> = std::collections::HashSet::new();
    for (i, f) in facilities.iter().enumerate() {
        let mut mask = 0u32;
        for (j, c) in clients.iter().enumerate() {
            if is_covered(c.distance(f), ctx.cover) {
                mask |= 1 << j;
            }
        }
        if mask != 0 && seen.insert(mask) {
            masks.push((mask, i));
        }
    }
    if masks.len() > ctx.cfg.mask_dp_mask_limit {
        return None;
    }
    let union = masks.iter().fold(0u32, |a, &(mask, _)| a | mask);
    if union != full {
        return Some(None);
    }
    // Keep only maximal masks; a dominated facility is never needed.
    let maximal: Vec<(u32, usize)> = masks
        .iter()
        .filter(|&&(mask, i)| {
            !masks
                .iter()
                .any(|&(other, j)| (mask & other) == mask && (other != mask || j < i))
        })
        .copied()
        .collect();

    let size = 1usize << m;
    let mut cost: Vec<u16> = vec![u16::MAX; size];
    let mut pick: Vec<u32> = vec![0; size];
    cost[0] = 0;
    for state in 1..size {
        let mut best = u16::MAX;
        let mut best_mask = 0u32;
        for &(mask, _) in &maximal {
            if state as u32 & mask == 0 {
                continue;
            }
            let rest = cost[state & !(mask as usize)];
            if rest != u16::MAX && rest + 1 < best {
                best = rest + 1;
                best_mask = mask;
            }
        }
        cost[state] = best;
        pick[state] = best_mask;
        ctx.stats.guesses += 1;
    }
    if cost[full as usize] == u16::MAX || cost[full as usize] as usize > k {
        return Some(None);
    }
    let mut chosen = Vec::new();
    let mut state = full as usize;
    while state != 0 {
        let mask = pick[state];
        let facility = maximal
            .iter()
            .find(|&&(m2, _)| m2 == mask)
            .expect("picked mask is maximal")
            .1;
        chosen.push(facilities[facility].clone());
        state &= !(mask as usize);
    }
    Some(Some(chosen))
}

/// Shared geometric bisection: maintains a certified lower bound and a best
/// found solution, stopping once `(1 + 2 eps_int) hi <= (1 + eps) lo` or the
/// probe budget runs out.
fn bisect<F>(
    user_eps: f64,
    eps_int: f64,
    mut lo: f64,
    mut hi: f64,
    incumbent: (Vec<Point>, f64),
    clients: &[Point],
    stats: &mut SolveStats,
    mut probe: F,
) -> Result<(Vec<Point>, f64), SupplierError>
where
    F: FnMut(f64, u64, &mut SolveStats) -> Result<Option<Vec<Point>>, SupplierError>,
{
    let budget = ((3.0 / user_eps).log2()).ceil() as usize + 1;
    let (mut best_centers, mut best_cost) = incumbent;
    while (1.0 + 2.0 * eps_int) * hi > (1.0 + user_eps) * lo && stats.probes < budget {
        let mid = (lo * hi).sqrt();
        stats.probes += 1;
        match probe(mid, stats.probes as u64, stats)? {
            Some(centers) => {
                let cost = clients
                    .iter()
                    .map(|c| c.distance_to_set(&centers))
                    .fold(0.0, f64::max);
                let certified = (1.0 + 2.0 * eps_int) * mid;
                assert!(
                    cost <= certified + 16.0 * REL_TOL * (1.0 + certified),
                    "probe returned a solution above its certified cost: {cost} vs {certified}"
                );
                if cost < best_cost {
                    best_centers = centers;
                    best_cost = cost;
                }
                hi = mid;
            }
            None => lo = mid,
        }
    }
    Ok((best_centers, best_cost))
}

/// `(1 + eps)`-approximation for k-supplier.
pub fn solve_ksupplier(
    inst: &KSupplierInstance,
    eps: f64,
    seed: u64,
) -> Result<SolveReport, SupplierError> {
    solve_ksupplier_with(inst, eps, seed, &SolverConfig::default())
}

pub fn solve_ksupplier_with(
    inst: &KSupplierInstance,
    eps: f64,
    seed: u64,
    cfg: &SolverConfig,
) -> Result<SolveReport, SupplierError> {
    assert!(eps > 0.0 && eps <= 1.0);
    if inst.facilities.len() < inst.k {
        return Err(SupplierError::TooFewFacilities { have: inst.facilities.len(), need: inst.k });
    }
    let start = Instant::now();
    let mut stats = SolveStats::default();

    if inst.k >= inst.facilities.len() {
        // Open everything; the cost is forced.
        let mut report =
            SolveReport::evaluated(inst.facilities.clone(), &inst.clients, SolveStats::default());
        report.stats.wall = start.elapsed();
        return Ok(report);
    }

    let base = hs_3approx(inst)?;
    if base.cost == 0.0 {
        return Ok(base);
    }
    let eps_int = eps / 4.0;
    let dim = inst.dim();
    let probe = |radius: f64, salt: u64, stats: &mut SolveStats| {
        let inv = 1.0 / radius;
        let scaled_clients: Vec<Point> = inst.clients.iter().map(|p| p.scaled(inv)).collect();
        let scaled_facilities: Vec<Point> = inst.facilities.iter().map(|p| p.scaled(inv)).collect();
        let fc = filter_clients(&scaled_clients, eps_int);
        if !size_guard(fc.kept.len(), inst.k, eps_int, dim) {
            return Ok(None);
        }
        let ff = filter_facilities(&scaled_facilities, &fc.kept, eps_int);
        if !size_guard(ff.kept.len(), inst.k, eps_int, dim) {
            return Ok(None);
        }
        let found = feasibility_search_with(
            &fc.kept,
            &ff.kept,
            inst.k,
            eps_int,
            mix_seed(seed, salt),
            cfg,
            stats,
        )?;
        Ok(found.map(|centers| centers.into_iter().map(|p| p.scaled(radius)).collect()))
    };

    let (centers, _) = bisect(
        eps,
        eps_int,
        base.cost / 3.0,
        base.cost,
        (base.centers, base.cost),
        &inst.clients,
        &mut stats,
        probe,
    )?;
    stats.wall = start.elapsed();
    Ok(SolveReport::evaluated(centers, &inst.clients, stats))
}

/// `(1 + eps)`-approximation for continuous k-center: centers may be placed
/// anywhere in space. Per probe, candidate centers are grid nets of the
/// `(1 + eps)`-balls around the filtered clients.
pub fn solve_kcenter(clients: &[Point], k: usize, eps: f64, seed: u64) -> SolveReport {
    solve_kcenter_with(clients, k, eps, seed, &SolverConfig::default())
        .expect("unbounded k-center solve cannot be interrupted")
}

pub fn solve_kcenter_with(
    clients: &[Point],
    k: usize,
    eps: f64,
    seed: u64,
    cfg: &SolverConfig,
) -> Result<SolveReport, SupplierError> {
    assert!(!clients.is_empty());
    assert!(k >= 1);
    assert!(eps > 0.0 && eps <= 1.0);
    let start = Instant::now();
    let mut stats = SolveStats::default();

    let mut distinct: Vec<Point> = clients.to_vec();
    distinct.sort_by(|a, b| a.lex_cmp(b));
    distinct.dedup();
    if distinct.len() <= k {
        let mut report = SolveReport::evaluated(distinct, clients, SolveStats::default());
        report.stats.wall = start.elapsed();
        return Ok(report);
    }

    let base = crate::oracles::gonzalez_2approx(clients, k, seed);
    let eps_int = eps / 4.0;
    let dim = clients[0].dim();
    let probe = |radius: f64, salt: u64, stats: &mut SolveStats| {
        let inv = 1.0 / radius;
        let scaled_clients: Vec<Point> = clients.iter().map(|p| p.scaled(inv)).collect();
        let fc = filter_clients(&scaled_clients, eps_int);
        if !size_guard(fc.kept.len(), k, eps_int, dim) {
            return Ok(None);
        }
        let mut net: Vec<Point> = fc
            .kept
            .iter()
            .flat_map(|p| ball_epsilon_net(p, 1.0 + eps_int, eps_int))
            .collect();
        net.sort_by(|a, b| a.lex_cmp(b));
        net.dedup();
        let found = feasibility_search_with(
            &fc.kept,
            &net,
            k,
            eps_int,
            mix_seed(seed, salt),
            cfg,
            stats,
        )?;
        Ok(found.map(|centers| centers.into_iter().map(|p| p.scaled(radius)).collect()))
    };

    // Farthest-first traversal is 2-approximate against the continuous
    // optimum, so the bracket is [cost/2, cost].
    let (centers, _) = bisect(
        eps,
        eps_int,
        base.cost / 2.0,
        base.cost,
        (base.centers, base.cost),
        clients,
        &mut stats,
        probe,
    )?;
    stats.wall = start.elapsed();
    Ok(SolveReport::evaluated(centers, clients, stats))
}
