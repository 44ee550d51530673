//! Exact and heuristic computation of the mutual-visibility number.

mod search;
mod space;

use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::constructions::{self, fixtures};
use crate::error::{Error, Result};
use crate::grid::{FactorKind, ProductGraph};
use crate::set::VertexSet;
use crate::visibility::{can_extend, is_mutual_visibility_set};

use search::{Params, Rules};
use space::{bit, Mask, Space, MAX_VERTICES};

/// Default vertex cap for exhaustive search.
pub const DEFAULT_VERTEX_CAP: usize = 64;

/// Which argument closed the search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BoundUsed {
    /// The search ran to completion.
    None,
    /// Stopped on reaching `min(3s, 2t)` for `P_s □ C_t`.
    CylinderBound,
    /// Stopped on reaching `3 min(s, t)` for `C_s □ C_t`.
    TorusBound,
    /// Stopped on reaching `2 min(s, t)` for `P_s □ P_t`.
    GridBound,
    /// Completed without beating the supplied seed, which is therefore optimal.
    SeedLowerBound,
}

impl fmt::Display for BoundUsed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Fibre-counting upper bound on `μ(g)`. Each x-fibre is a copy of the x
/// factor and is convex, so it holds at most 2 members (path) or 3 (cycle);
/// likewise for y-fibres.
pub fn upper_bound(g: &ProductGraph) -> usize {
    let cap = |kind| if kind == FactorKind::Cycle { 3 } else { 2 };
    let along_rows = g.height() * cap(g.fx.kind());
    let along_cols = g.width() * cap(g.fy.kind());
    along_rows.min(along_cols)
}

fn bound_kind(g: &ProductGraph) -> BoundUsed {
    match (g.fx.is_cycle(), g.fy.is_cycle()) {
        (true, true) => BoundUsed::TorusBound,
        (false, false) => BoundUsed::GridBound,
        _ => BoundUsed::CylinderBound,
    }
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub timeout: Option<Duration>,
    /// A known mutual-visibility set; the search only looks for larger ones.
    pub seed_lower_bound: Option<VertexSet>,
    /// Largest vertex count accepted (at most 128).
    pub vertex_cap: usize,
    /// Worker threads. Results do not depend on this.
    pub threads: usize,
    /// Seed for the randomized restarts used to warm up the search.
    pub seed: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            timeout: None,
            seed_lower_bound: None,
            vertex_cap: DEFAULT_VERTEX_CAP,
            threads: 1,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub mu: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub bound_used: BoundUsed,
    pub exhaustive: bool,
}

impl SolveReport {
    pub fn to_json(&self) -> String {
        let report = serde_json::json!({
            "graph": self.witness.graph().to_string(),
            "mu": self.mu,
            "exhaustive": self.exhaustive,
            "witness": self.witness.iter().map(|v| [v.x, v.y]).collect::<Vec<_>>(),
            "nodes": self.nodes_explored,
            "ms": self.elapsed.as_millis() as u64,
        });
        report.to_string()
    }
}

/// Computes `μ(g)` by branch and bound.
///
/// Vertices are branched in row-major order, include first. A candidate is
/// dropped as soon as adding it breaks visibility, which is final because
/// every subset of a mutual-visibility set is one. Subtrees are cut when the
/// per-row and per-column capacities cannot beat the best set so far, and the
/// search ends early once [`upper_bound`] is reached. Translations are
/// factored out by requiring row 0 to be a fullest row (cyclic y factor) and
/// `(0, 0)` to be a member (two cyclic factors).
///
/// Among optimal sets the one reported is the first in search order, which
/// is the lexicographically smallest `(y, x)` list among the sets the
/// reductions keep, unless the seed is already optimal.
pub fn mu_exact(g: &ProductGraph, opts: &SolveOptions) -> Result<SolveReport> {
    let start = Instant::now();
    let n = g.vertex_count();
    let cap = opts.vertex_cap.min(MAX_VERTICES);
    if n > cap {
        return Err(Error::VertexCapExceeded { vertices: n, cap });
    }
    if let Some(seed) = &opts.seed_lower_bound {
        if seed.graph() != g {
            return Err(Error::GraphMismatch {
                expected: g.to_string(),
                found: seed.graph().to_string(),
            });
        }
        let report = is_mutual_visibility_set(seed);
        if let Some((u, v)) = report.failing_pair {
            return Err(Error::input(format!(
                "seed is not a mutual-visibility set: {u} and {v} are not visible"
            )));
        }
    }

    // The search wants any cyclic factor on y.
    let flip = g.fx.is_cycle() && !g.fy.is_cycle();
    let h = if flip { g.transpose() } else { *g };
    let sp = Space::new(h);
    let seed_mask = opts.seed_lower_bound.as_ref().map(|s| {
        let s = if flip { s.transpose() } else { s.clone() };
        sp.mask_of(s.iter())
    });
    let seed_len = seed_mask.map_or(0, |m| m.count_ones() as usize);
    let warm = warm_start(&sp, opts.seed);
    let warm_len = warm.count_ones() as usize;
    let ceiling = upper_bound(&h);

    let params = Params {
        rules: Rules {
            force_origin: h.fx.is_cycle() && h.fy.is_cycle(),
            fullest_row_first: h.fy.is_cycle(),
        },
        // A warm-start value is only a floor for pruning: the search still
        // has to produce its own set of that size.
        floor: seed_len.max(warm_len.saturating_sub(1)),
        ceiling,
        deadline: opts.timeout.map(|t| start + t),
        threads: opts.threads.max(1),
    };
    let outcome = search::run(&sp, &params);

    let (mask, bound_used) = match outcome.best {
        Some(m) if m.count_ones() as usize >= ceiling => (m, bound_kind(&h)),
        Some(m) => (m, BoundUsed::None),
        None => match seed_mask {
            Some(m) if seed_len >= warm_len || outcome.timed_out => {
                let bound = if seed_len >= ceiling {
                    bound_kind(&h)
                } else {
                    BoundUsed::SeedLowerBound
                };
                (m, bound)
            }
            // Only reachable on timeout before the search matched the warm start.
            _ => (warm, BoundUsed::None),
        },
    };
    let witness = VertexSet::from_vertices(h, sp.vertices_of(mask))?;
    let witness = if flip { witness.transpose() } else { witness };
    let check = is_mutual_visibility_set(&witness);
    assert!(
        check.ok,
        "solver produced an invalid witness on {g}: {:?} fails",
        check.failing_pair
    );
    Ok(SolveReport {
        mu: witness.len(),
        witness,
        nodes_explored: outcome.nodes,
        elapsed: start.elapsed(),
        bound_used,
        exhaustive: !outcome.timed_out,
    })
}

const RESTARTS: usize = 24;

/// Best greedy set over row-major order and a few seeded random orders.
fn warm_start(sp: &Space, seed: u64) -> Mask {
    let greedy = |order: &[usize]| {
        order.iter().fold(0, |cur, &c| {
            if sp.can_add(cur, c) {
                cur | bit(c)
            } else {
                cur
            }
        })
    };
    let mut order: Vec<usize> = (0..sp.n).collect();
    let mut best: Mask = greedy(&order);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RESTARTS {
        order.shuffle(&mut rng);
        let m = greedy(&order);
        if m.count_ones() > best.count_ones() {
            best = m;
        }
    }
    best
}

/// A verified lower bound on `μ(g)` with its witness: the best of the closed
/// forms (extended or embedded as needed), the shipped fixtures, and greedy
/// augmentation from randomized orders.
pub fn mu_lower_bound(g: &ProductGraph) -> (usize, VertexSet) {
    mu_lower_bound_seeded(g, 0)
}

/// [`mu_lower_bound`] with an explicit seed for the random restarts.
pub fn mu_lower_bound_seeded(g: &ProductGraph, seed: u64) -> (usize, VertexSet) {
    let mut best = VertexSet::new(*g);
    let offer = |best: &mut VertexSet, cand: Option<VertexSet>| {
        if let Some(m) = cand {
            if m.len() > best.len() && m.graph() == g && is_mutual_visibility_set(&m).ok {
                *best = m;
            }
        }
    };
    offer(&mut best, from_constructions(g));
    offer(&mut best, fixtures::lookup(g));
    offer(&mut best, from_fixtures(g));
    let greedy = greedy_restarts(g, seed, &best);
    offer(&mut best, Some(greedy));
    (best.len(), best)
}

fn from_constructions(g: &ProductGraph) -> Option<VertexSet> {
    match (g.fx.is_cycle(), g.fy.is_cycle()) {
        (true, true) => {
            let (flip, s, t) = if g.width() >= g.height() {
                (false, g.width(), g.height())
            } else {
                (true, g.height(), g.width())
            };
            let m = constructions::construct_torus_square(t).ok()?;
            let m = constructions::extend_torus_to(&m, s).ok()?;
            Some(if flip { m.transpose() } else { m })
        }
        (false, true) => {
            let m = constructions::construct_cylinder(g.height()).ok()?;
            constructions::embed_cylinder(&m, g.width()).ok()
        }
        (true, false) => from_constructions(&g.transpose()).map(|m| m.transpose()),
        (false, false) => None,
    }
}

/// Grows a shipped witness on a narrower graph of the same family.
fn from_fixtures(g: &ProductGraph) -> Option<VertexSet> {
    let (flip, h) = match (g.fx.is_cycle(), g.fy.is_cycle()) {
        (true, false) => (true, g.transpose()),
        (true, true) if g.width() < g.height() => (true, g.transpose()),
        _ => (false, *g),
    };
    let grown = fixtures::embedded().into_iter().filter_map(|f| {
        let m = &f.set;
        let fg = m.graph();
        if fg.fy != h.fy || fg.fx.kind() != h.fx.kind() || fg.width() > h.width() {
            return None;
        }
        if h.fx.is_cycle() {
            constructions::extend_torus_to(m, h.width()).ok()
        } else {
            constructions::embed_cylinder(m, h.width()).ok()
        }
    });
    let best = grown.max_by_key(|m| m.len())?;
    Some(if flip { best.transpose() } else { best })
}

fn greedy_restarts(g: &ProductGraph, seed: u64, known: &VertexSet) -> VertexSet {
    if g.vertex_count() <= MAX_VERTICES {
        let sp = Space::new(*g);
        let m = warm_start(&sp, seed);
        return VertexSet::from_vertices(*g, sp.vertices_of(m)).expect("in range");
    }
    // Large graphs: a single augmentation pass over whatever is known.
    let mut m = known.clone();
    for v in g.vertices() {
        if !m.contains(v) && can_extend(&m, v) {
            m.insert(v).expect("in range");
        }
    }
    m
}
