//! Widening a torus set by inserting empty columns.
//!
//! Inserting `i` empty `C_t`-fibres at the positions `S` moves every point
//! `(x, y)` to `(x + δ_S(x), y)`, where `δ_S(x)` counts the positions of `S`
//! strictly below `x`. The positions are dealt round-robin into the three
//! thirds of the width, so each third receives `⌊i/3⌋` or `⌊i/3⌋ + 1` of them
//! and the three points of a row drift apart evenly.

use crate::error::{Error, Result};
use crate::grid::ProductGraph;
use crate::set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionPlan {
    base_width: usize,
    positions: Vec<usize>,
    shift: Vec<usize>,
}

impl InsertionPlan {
    pub fn base_width(&self) -> usize {
        self.base_width
    }

    pub fn inserted(&self) -> usize {
        self.positions.len()
    }

    /// `S_i` in the order the positions were dealt.
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    /// `δ_S(x)` for every `x` of the base width.
    pub fn shift(&self) -> &[usize] {
        &self.shift
    }

    /// Width of the first factor after insertion.
    pub fn target_width(&self) -> usize {
        self.base_width + self.positions.len()
    }

    /// Length of each third and how many inserted positions it holds.
    pub fn per_third(&self) -> [usize; 3] {
        let third = third_len(self.base_width);
        let mut counts = [0; 3];
        for &p in &self.positions {
            counts[(p / third).min(2)] += 1;
        }
        counts
    }
}

/// Length of the first two thirds; the last third takes what remains.
fn third_len(width: usize) -> usize {
    match width % 3 {
        2 => width / 3 + 1,
        _ => width / 3,
    }
}

/// Plan inserting `i` columns into a torus of width `t` (`0 <= i <= t`).
///
/// Positions are `(j mod 3)·q + (⌊j/3⌋ mod q)` for `j < i`, with `q = ⌊t/3⌋`
/// for `t ≡ 0, 1 (mod 3)` and `q = ⌊t/3⌋ + 1` for `t ≡ 2`. When `t ≡ 1` and
/// `i = t` the plan is every position.
pub fn insertion_plan(t: usize, i: usize) -> Result<InsertionPlan> {
    if t < 3 {
        return Err(Error::input(format!(
            "insertion needs a cycle of order >= 3, got {t}"
        )));
    }
    if i > t {
        return Err(Error::input(format!(
            "a single plan inserts at most t = {t} columns, asked for {i}; compose plans instead"
        )));
    }
    let q = third_len(t);
    let positions: Vec<usize> = if t % 3 == 1 && i == t {
        (0..t).collect()
    } else {
        (0..i).map(|j| (j % 3) * q + (j / 3) % q).collect()
    };
    let mut hit = vec![false; t];
    for &p in &positions {
        debug_assert!(p < t && !hit[p], "plan positions must be distinct");
        hit[p] = true;
    }
    let mut shift = Vec::with_capacity(t);
    let mut below = 0;
    for flag in &hit {
        shift.push(below);
        below += usize::from(*flag);
    }
    Ok(InsertionPlan {
        base_width: t,
        positions,
        shift,
    })
}

/// Applies `plan` to a set on `C_w □ C_h` with `w = plan.base_width()`.
pub fn extend_torus(m: &VertexSet, plan: &InsertionPlan) -> Result<VertexSet> {
    let g = m.graph();
    if !g.fx.is_cycle() || !g.fy.is_cycle() {
        return Err(Error::input(format!("{g} is not a torus")));
    }
    if g.width() != plan.base_width {
        return Err(Error::input(format!(
            "plan is for width {}, set lives on {g}",
            plan.base_width
        )));
    }
    let target = ProductGraph::torus(plan.target_width(), g.height())?;
    VertexSet::from_vertices(target, m.iter().map(|v| (v.x + plan.shift[v.x], v.y)))
}

/// Widens a torus set to `C_s □ C_h` by consecutive plans, each inserting at
/// most the current width.
pub fn extend_torus_to(m: &VertexSet, s: usize) -> Result<VertexSet> {
    let width = m.graph().width();
    if s < width {
        return Err(Error::input(format!(
            "cannot shrink {} to width {s}",
            m.graph()
        )));
    }
    let mut current = m.clone();
    while current.graph().width() < s {
        let w = current.graph().width();
        let plan = insertion_plan(w, (s - w).min(w))?;
        current = extend_torus(&current, &plan)?;
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::construct_torus_square;

    #[test]
    fn one_per_third() {
        let p = insertion_plan(15, 3).unwrap();
        assert_eq!(p.positions(), &[0, 5, 10]);
        assert_eq!(p.per_third(), [1, 1, 1]);
    }

    #[test]
    fn single_insertion_shift() {
        let p = insertion_plan(15, 1).unwrap();
        assert_eq!(p.positions(), &[0]);
        assert_eq!(p.shift()[0], 0);
        assert!(p.shift()[1..].iter().all(|&d| d == 1));
    }

    #[test]
    fn six_positions() {
        let p = insertion_plan(15, 6).unwrap();
        assert_eq!(p.positions(), &[0, 5, 10, 1, 6, 11]);
        assert_eq!(p.per_third(), [2, 2, 2]);
    }

    #[test]
    fn plans_are_uniform_and_monotone() {
        for t in 3..=40 {
            for i in 0..=t {
                let p = insertion_plan(t, i).unwrap();
                assert_eq!(p.inserted(), i);
                let mut sorted = p.positions().to_vec();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), i, "t={t} i={i}: repeated positions");
                assert!(p.shift().windows(2).all(|w| w[0] <= w[1]));
                assert!(*p.shift().last().unwrap() <= i);
                if !(t % 3 == 1 && i == t) {
                    for c in p.per_third() {
                        assert!(
                            c == i / 3 || c == i / 3 + 1,
                            "t={t} i={i} {:?}",
                            p.per_third()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn full_width_plans_cover_everything() {
        for t in [15, 16, 17, 18] {
            let p = insertion_plan(t, t).unwrap();
            assert!(p.shift().iter().enumerate().all(|(x, &d)| d == x), "t={t}");
        }
    }

    #[test]
    fn identity_and_errors() {
        let m = construct_torus_square(15).unwrap();
        let same = extend_torus(&m, &insertion_plan(15, 0).unwrap()).unwrap();
        assert_eq!(same, m);
        assert!(insertion_plan(15, 16).is_err());
        assert!(extend_torus(&m, &insertion_plan(16, 1).unwrap()).is_err());
        assert!(extend_torus_to(&m, 14).is_err());
    }

    #[test]
    fn composition_reaches_triple_width() {
        let m = construct_torus_square(15).unwrap();
        let wide = extend_torus_to(&m, 45).unwrap();
        assert_eq!(wide.graph().to_string(), "C45xC15");
        assert_eq!(wide.len(), 45);
    }
}
