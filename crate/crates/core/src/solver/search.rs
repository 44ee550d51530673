//! Branch and bound over row-major vertex order, include before exclude.
//!
//! The tree is cut at a fixed depth into tasks that run independently, each
//! starting from the same floor. Results are merged in tree order, so the
//! reported optimum, witness and node count do not depend on the number of
//! worker threads.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::space::{bit, bits, Mask, Space};

const SPLIT_DEPTH: usize = 6;
const CLOCK_MASK: u64 = (1 << 14) - 1;

/// Automorphism reductions valid for the graph being searched.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Rules {
    /// Some member may be translated to `(0, 0)`: both factors are cycles.
    pub force_origin: bool,
    /// Rows may be rotated so row 0 is a fullest row: the y factor is a cycle.
    pub fullest_row_first: bool,
}

pub(crate) struct Params {
    pub rules: Rules,
    /// Size already achieved; only strictly larger sets are recorded.
    pub floor: usize,
    /// Proven upper bound; reaching it ends the search.
    pub ceiling: usize,
    pub deadline: Option<Instant>,
    pub threads: usize,
}

pub(crate) struct Outcome {
    /// Largest set found above the floor, if any.
    pub best: Option<Mask>,
    pub nodes: u64,
    pub timed_out: bool,
}

#[derive(Clone, Copy)]
struct Node {
    cur: Mask,
    cnt: usize,
    cand: Mask,
}

struct Shared {
    /// Lowest task index that reached the ceiling.
    done_at: AtomicUsize,
    timed_out: AtomicBool,
}

struct Worker<'a> {
    sp: &'a Space,
    p: &'a Params,
    shared: &'a Shared,
    task: usize,
    best: usize,
    set: Option<Mask>,
    nodes: u64,
}

pub(crate) fn run(sp: &Space, p: &Params) -> Outcome {
    let mut root = Node {
        cur: 0,
        cnt: 0,
        cand: if sp.n == 128 { !0 } else { bit(sp.n) - 1 },
    };
    if p.rules.force_origin {
        root.cur = bit(0);
        root.cnt = 1;
        root.cand = bits(root.cand & !bit(0))
            .filter(|&c| sp.can_add(bit(0), c))
            .fold(0, |m, c| m | bit(c));
    }
    let mut tasks = Vec::new();
    let mut split_nodes = 0;
    split(sp, p, root, SPLIT_DEPTH, &mut tasks, &mut split_nodes);

    let shared = Shared {
        done_at: AtomicUsize::new(usize::MAX),
        timed_out: AtomicBool::new(false),
    };
    let solve = |(task, node): (usize, &Node)| {
        let mut w = Worker {
            sp,
            p,
            shared: &shared,
            task,
            best: p.floor,
            set: None,
            nodes: 0,
        };
        w.dfs(node.cur, node.cnt, node.cand);
        (w.best, w.set, w.nodes)
    };
    let results: Vec<_> = if p.threads > 1 {
        match rayon::ThreadPoolBuilder::new()
            .num_threads(p.threads)
            .build()
        {
            Ok(pool) => pool.install(|| tasks.par_iter().enumerate().map(solve).collect()),
            Err(_) => tasks.iter().enumerate().map(solve).collect(),
        }
    } else {
        tasks.iter().enumerate().map(solve).collect()
    };

    let timed_out = shared.timed_out.load(Ordering::Relaxed);
    let last = shared
        .done_at
        .load(Ordering::Relaxed)
        .min(results.len().saturating_sub(1));
    let counted = if timed_out { results.len() } else { last + 1 };
    let nodes = split_nodes + results[..counted].iter().map(|r| r.2).sum::<u64>();
    let mut best: Option<(usize, Mask)> = None;
    for &(size, set, _) in &results[..=last] {
        if let Some(set) = set {
            if best.is_none_or(|(b, _)| size > b) {
                best = Some((size, set));
            }
        }
    }
    Outcome {
        best: best.map(|(_, m)| m),
        nodes,
        timed_out,
    }
}

/// Expands the top of the tree in DFS order, emitting its frontier as tasks.
/// Every node's own set reappears as the set of its all-exclude descendant.
fn split(sp: &Space, p: &Params, node: Node, depth: usize, out: &mut Vec<Node>, nodes: &mut u64) {
    if depth == 0 || node.cand == 0 {
        out.push(node);
        return;
    }
    *nodes += 1;
    let (with, without) = children(sp, p.rules, node);
    split(sp, p, with, depth - 1, out, nodes);
    split(sp, p, without, depth - 1, out, nodes);
}

fn children(sp: &Space, rules: Rules, node: Node) -> (Node, Node) {
    let v = node.cand.trailing_zeros() as usize;
    let rest = node.cand & !bit(v);
    let cur = node.cur | bit(v);
    let cand = bits(rest)
        .filter(|&c| sp.can_add(cur, c))
        .fold(0, |m, c| m | bit(c));
    let with = Node {
        cur,
        cnt: node.cnt + 1,
        cand: restrict(sp, rules, cur, cand),
    };
    let without = Node {
        cur: node.cur,
        cnt: node.cnt,
        cand: restrict(sp, rules, node.cur, rest),
    };
    (with, without)
}

/// Once row 0 is settled, no other row may outgrow it.
fn restrict(sp: &Space, rules: Rules, cur: Mask, mut cand: Mask) -> Mask {
    if !rules.fullest_row_first || cand & sp.rows[0] != 0 {
        return cand;
    }
    let top = (cur & sp.rows[0]).count_ones();
    if top == 0 {
        return 0;
    }
    for &row in &sp.rows[1..] {
        if (cur & row).count_ones() >= top {
            cand &= !row;
        }
    }
    cand
}

impl Worker<'_> {
    fn stopped(&self) -> bool {
        self.shared.timed_out.load(Ordering::Relaxed)
            || self.shared.done_at.load(Ordering::Relaxed) < self.task
    }

    fn dfs(&mut self, cur: Mask, cnt: usize, cand: Mask) {
        self.nodes += 1;
        if self.nodes & CLOCK_MASK == 0 {
            if let Some(deadline) = self.p.deadline {
                if Instant::now() >= deadline {
                    self.shared.timed_out.store(true, Ordering::Relaxed);
                }
            }
        }
        if self.stopped() {
            return;
        }
        if cnt > self.best {
            self.best = cnt;
            self.set = Some(cur);
            if cnt >= self.p.ceiling {
                self.shared.done_at.fetch_min(self.task, Ordering::Relaxed);
                return;
            }
        }
        if cand == 0 || cnt + self.fiber_room(cur, cand) <= self.best {
            return;
        }
        let (with, without) = children(self.sp, self.p.rules, Node { cur, cnt, cand });
        self.dfs(with.cur, with.cnt, with.cand);
        if self.best >= self.p.ceiling {
            return;
        }
        self.dfs(without.cur, without.cnt, without.cand);
    }

    /// How many more members the candidates can add, counting each row and
    /// each column up to its capacity. Under `fullest_row_first`, rows below
    /// the top one are further capped by the most row 0 can still hold.
    fn fiber_room(&self, cur: Mask, cand: Mask) -> usize {
        let sp = self.sp;
        let room = |fibers: &[Mask], cap: usize, first_cap: usize| -> usize {
            fibers
                .iter()
                .enumerate()
                .map(|(i, &f)| {
                    let cap = if i == 0 { first_cap } else { cap };
                    let used = (cur & f).count_ones() as usize;
                    cap.saturating_sub(used)
                        .min((cand & f).count_ones() as usize)
                })
                .sum()
        };
        let row_cap = if self.p.rules.fullest_row_first {
            let top = ((cur | cand) & sp.rows[0]).count_ones() as usize;
            sp.row_cap.min(top)
        } else {
            sp.row_cap
        };
        let rows = room(&sp.rows, row_cap, sp.row_cap);
        let cols = room(&sp.cols, sp.col_cap, sp.col_cap);
        rows.min(cols)
    }
}
