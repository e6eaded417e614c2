//! Euclidean non-uniform k-center via enclosing-ball witness growth.
//!
//! The decision procedure maintains one witness set per hypothesized optimal
//! ball. Each step picks the uncovered client farthest from all current
//! witness centers and branches over which witness set it joins; a set whose
//! enclosing ball outgrows its hypothesized radius can no longer be a subset
//! of that optimal ball and the branch dies. Witness sets are capped at
//! `ceil(2/eps)` points: the enclosing-ball growth recurrence forces the
//! expanded ball to cover its whole hypothesized ball by then.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{meb, Point, REL_TOL};
use crate::limits::{Interrupt, SearchLimits};
use crate::nukc_general::{solve_nukc_general_bounded, BallCenter, NUkCInstance, PlacedBall, NUkCSolution};

/// One witness addition: which slot grew, its enclosing-ball radius after the
/// addition, and that radius over the slot's expanded target radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoresetStep {
    pub slot: usize,
    pub meb_radius: f64,
    pub ratio: f64,
}

/// Per-branch record of witness growth, kept for the successful branch.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CoresetTrace {
    pub steps: Vec<CoresetStep>,
}

impl CoresetTrace {
    /// Ratios in addition order for one slot.
    pub fn slot_ratios(&self, slot: usize) -> Vec<f64> {
        self.steps.iter().filter(|s| s.slot == slot).map(|s| s.ratio).collect()
    }
}

/// A ball selected by the decision procedure: the enclosing-ball center of
/// slot `slot`, expanded to radius `(1 + eps) * slot_radius`.
#[derive(Debug, Clone, PartialEq)]
pub struct SlotCover {
    pub slot: usize,
    pub center: Point,
    pub radius: f64,
}

/// Decides whether all clients can be covered by `k` balls whose radii are the
/// given (already dilation-scaled) multiset, up to a `(1 + eps)` expansion.
/// Succeeds whenever an exact cover at these radii exists; may also succeed
/// slightly below that. `slot_radii` must be sorted descending.
pub fn nukc_euclid_decision(
    clients: &[Point],
    slot_radii: &[f64],
    eps: f64,
    seed: u64,
) -> Option<(Vec<SlotCover>, CoresetTrace)> {
    let mut nodes = 0;
    nukc_euclid_decision_bounded(clients, slot_radii, eps, seed, SearchLimits::UNBOUNDED, &mut nodes)
        .expect("unbounded search cannot be interrupted")
}

pub fn nukc_euclid_decision_bounded(
    clients: &[Point],
    slot_radii: &[f64],
    eps: f64,
    seed: u64,
    limits: SearchLimits,
    nodes: &mut u64,
) -> Result<Option<(Vec<SlotCover>, CoresetTrace)>, Interrupt> {
    assert!(!clients.is_empty());
    assert!(eps > 0.0 && eps <= 1.0);
    assert!(slot_radii.windows(2).all(|w| w[0] >= w[1]), "slot radii must be sorted descending");
    let cap = (2.0 / eps).ceil() as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let first = rng.gen_range(0..clients.len());

    let mut state = SearchState {
        clients,
        slot_radii,
        eps,
        cap,
        slots: vec![Vec::new(); slot_radii.len()],
        balls: vec![None; slot_radii.len()],
        trace: Vec::new(),
        limits,
    };
    if state.grow(first, nodes)? {
        let covers = state
            .slots
            .iter()
            .enumerate()
            .filter(|(_, members)| !members.is_empty())
            .map(|(slot, _)| {
                let ball = state.balls[slot].as_ref().expect("nonempty slot has a ball");
                SlotCover {
                    slot,
                    center: ball.0.clone(),
                    radius: (1.0 + eps) * slot_radii[slot],
                }
            })
            .collect();
        Ok(Some((covers, CoresetTrace { steps: state.trace })))
    } else {
        Ok(None)
    }
}

struct SearchState<'a> {
    clients: &'a [Point],
    slot_radii: &'a [f64],
    eps: f64,
    cap: usize,
    slots: Vec<Vec<usize>>,
    /// Enclosing ball (center, radius) per nonempty slot.
    balls: Vec<Option<(Point, f64)>>,
    trace: Vec<CoresetStep>,
    limits: SearchLimits,
}

impl SearchState<'_> {
    fn covered(&self, client: usize) -> bool {
        self.balls.iter().enumerate().any(|(slot, ball)| {
            ball.as_ref().is_some_and(|(center, _)| {
                let reach = (1.0 + self.eps) * self.slot_radii[slot];
                self.clients[client].distance(center) <= reach + REL_TOL * (1.0 + reach)
            })
        })
    }

    /// Distance from a client to the nearest current witness center.
    fn delta(&self, client: usize) -> f64 {
        self.balls
            .iter()
            .flatten()
            .map(|(center, _)| self.clients[client].distance(center))
            .fold(f64::INFINITY, f64::min)
    }

    /// Branch on the slot receiving `client`; returns true when some branch
    /// reaches full coverage.
    fn grow(&mut self, client: usize, nodes: &mut u64) -> Result<bool, Interrupt> {
        self.limits.tick(nodes)?;
        debug_assert!(!self.covered(client), "selected point must be uncovered");
        for slot in 0..self.slots.len() {
            if self.slots[slot].len() == self.cap {
                continue;
            }
            // Slots with equal radius and identical contents are
            // interchangeable; branching on the first is enough.
            if (0..slot).any(|p| {
                self.slot_radii[p] == self.slot_radii[slot] && self.slots[p] == self.slots[slot]
            }) {
                continue;
            }
            let members: Vec<Point> = self.slots[slot]
                .iter()
                .chain(std::iter::once(&client))
                .map(|&i| self.clients[i].clone())
                .collect();
            let grown = meb(&members).expect("nonempty witness set");
            let target = self.slot_radii[slot];
            if grown.radius > target + REL_TOL * (1.0 + target) {
                // The witness set cannot be a subset of a ball of this radius.
                continue;
            }

            self.slots[slot].push(client);
            let previous = self.balls[slot].take();
            self.balls[slot] = Some((grown.center, grown.radius));
            self.trace.push(CoresetStep {
                slot,
                meb_radius: grown.radius,
                ratio: grown.radius / ((1.0 + self.eps) * target),
            });

            if self.advance(nodes)? {
                return Ok(true);
            }

            self.trace.pop();
            self.balls[slot] = previous;
            self.slots[slot].pop();
        }
        Ok(false)
    }

    /// Re-check coverage, pick the farthest uncovered client, and keep growing.
    fn advance(&mut self, nodes: &mut u64) -> Result<bool, Interrupt> {
        let mut farthest: Option<(f64, usize)> = None;
        for c in 0..self.clients.len() {
            if self.covered(c) {
                continue;
            }
            let d = self.delta(c);
            if farthest.map_or(true, |(best, _)| d > best) {
                farthest = Some((d, c));
            }
        }
        match farthest {
            None => Ok(true),
            Some((_, next)) => self.grow(next, nodes),
        }
    }
}

/// Outcome of the Euclidean scheme: the cover plus the witness-growth trace of
/// the successful branch.
#[derive(Debug, Clone)]
pub struct NUkCEuclidReport {
    pub solution: NUkCSolution,
    pub trace: CoresetTrace,
    pub probes: usize,
}

/// `(1 + eps)`-approximation for Euclidean non-uniform k-center with centers
/// anywhere in space.
///
/// The dilation bracket comes from the general-metric solver run with C = F
/// (its cover is also valid here, and its own analysis works against the
/// continuous optimum, so the continuous optimum lies in `[cost/4, cost]`).
/// Geometric bisection with the decision procedure at inner accuracy `eps/4`
/// then closes the bracket to relative width `eps/4`.
pub fn solve_nukc_euclidean(
    clients: &[Point],
    radii: &[f64],
    counts: &[usize],
    eps: f64,
    seed: u64,
) -> NUkCEuclidReport {
    let mut nodes = 0;
    solve_nukc_euclidean_bounded(clients, radii, counts, eps, seed, SearchLimits::UNBOUNDED, &mut nodes)
        .expect("unbounded search cannot be interrupted")
}

#[allow(clippy::too_many_arguments)]
pub fn solve_nukc_euclidean_bounded(
    clients: &[Point],
    radii: &[f64],
    counts: &[usize],
    eps: f64,
    seed: u64,
    limits: SearchLimits,
    nodes: &mut u64,
) -> Result<NUkCEuclidReport, Interrupt> {
    assert!(eps > 0.0 && eps <= 1.0);
    let inst = NUkCInstance::euclidean_continuous(clients.to_vec(), radii.to_vec(), counts.to_vec())
        .expect("valid instance");
    let bracket = solve_nukc_general_bounded(&inst, limits, nodes)?;
    if bracket.dilation == 0.0 {
        return Ok(NUkCEuclidReport {
            solution: free_centered(bracket, clients),
            trace: CoresetTrace::default(),
            probes: 0,
        });
    }

    // Slot layout: radii expanded by multiplicity, descending, remembering the
    // class of each slot.
    let mut slot_classes: Vec<usize> = Vec::new();
    for (class, &count) in counts.iter().enumerate() {
        for _ in 0..count {
            slot_classes.push(class);
        }
    }
    let base_radii: Vec<f64> = slot_classes.iter().map(|&c| radii[c]).collect();

    let inner_eps = eps / 4.0;
    let mut lo = bracket.dilation / 4.0;
    let mut hi = bracket.dilation;
    let mut probes = 0usize;
    let mut incumbent: Option<(f64, Vec<SlotCover>, CoresetTrace)> = None;

    let probe = |alpha: f64, probes: &mut usize, nodes: &mut u64| {
        *probes += 1;
        let scaled: Vec<f64> = base_radii.iter().map(|r| r * alpha).collect();
        nukc_euclid_decision_bounded(clients, &scaled, inner_eps, seed, limits, nodes)
    };

    if let Some((covers, trace)) = probe(hi, &mut probes, nodes)? {
        incumbent = Some((hi, covers, trace));
    }
    while hi > lo * (1.0 + inner_eps) {
        let mid = (lo * hi).sqrt();
        match probe(mid, &mut probes, nodes)? {
            Some((covers, trace)) => {
                hi = mid;
                incumbent = Some((mid, covers, trace));
            }
            None => lo = mid,
        }
    }

    Ok(match incumbent {
        Some((_, covers, trace)) => {
            let balls: Vec<PlacedBall> = covers
                .iter()
                .map(|c| PlacedBall {
                    center: BallCenter::Free(c.center.clone()),
                    radius_index: slot_classes[c.slot],
                })
                .collect();
            let dilation = NUkCSolution::recompute_dilation(&balls, &inst);
            NUkCEuclidReport { solution: NUkCSolution { balls, dilation }, trace, probes }
        }
        // The top probe is guaranteed to succeed; the general-metric cover is
        // kept as a safety net so a valid solution is always returned.
        None => NUkCEuclidReport {
            solution: free_centered(solve_nukc_general_bounded(&inst, limits, nodes)?, clients),
            trace: CoresetTrace::default(),
            probes,
        },
    })
}

fn free_centered(sol: NUkCSolution, clients: &[Point]) -> NUkCSolution {
    let balls = sol
        .balls
        .into_iter()
        .map(|b| PlacedBall {
            center: match b.center {
                BallCenter::Facility(i) => BallCenter::Free(clients[i].clone()),
                free => free,
            },
            radius_index: b.radius_index,
        })
        .collect();
    NUkCSolution { balls, dilation: sol.dilation }
}
