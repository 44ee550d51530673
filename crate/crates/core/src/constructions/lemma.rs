//! A sufficient condition for mutual visibility in grids `P_s □ P_t`.

use std::fmt;

use crate::grid::Vertex;
use crate::set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lemma1Violation {
    /// (i): a row (fixed `y`) or column (fixed `x`) holds three or more members.
    CrowdedFiber {
        row: bool,
        index: usize,
        count: usize,
    },
    /// (ii): two full rows whose x-spans are disjoint.
    RowSpansDisjoint { rows: (usize, usize) },
    /// (iii): two full columns whose y-spans are disjoint.
    ColumnSpansDisjoint { columns: (usize, usize) },
    /// (iv): two members at grid distance below 3.
    TooClose { pair: (Vertex, Vertex), dist: usize },
}

impl Lemma1Violation {
    /// Which of the four conditions failed, 1-based.
    pub fn condition(&self) -> usize {
        match self {
            Lemma1Violation::CrowdedFiber { .. } => 1,
            Lemma1Violation::RowSpansDisjoint { .. } => 2,
            Lemma1Violation::ColumnSpansDisjoint { .. } => 3,
            Lemma1Violation::TooClose { .. } => 4,
        }
    }
}

impl fmt::Display for Lemma1Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lemma1Violation::CrowdedFiber { row, index, count } => {
                let which = if *row { "row y" } else { "column x" };
                write!(f, "condition (i): {which}={index} holds {count} members")
            }
            Lemma1Violation::RowSpansDisjoint { rows } => {
                write!(
                    f,
                    "condition (ii): rows {} and {} have disjoint x-spans",
                    rows.0, rows.1
                )
            }
            Lemma1Violation::ColumnSpansDisjoint { columns } => write!(
                f,
                "condition (iii): columns {} and {} have disjoint y-spans",
                columns.0, columns.1
            ),
            Lemma1Violation::TooClose { pair, dist } => {
                write!(
                    f,
                    "condition (iv): {} and {} are at distance {dist}",
                    pair.0, pair.1
                )
            }
        }
    }
}

/// Checks the four grid conditions on `m`, reading its coordinates as points
/// of `P_s □ P_t` (linear spans and distances). `Ok` means `m` is guaranteed
/// to be a mutual-visibility set of the grid; `Err` names the first failed
/// condition and does not by itself mean `m` is not one.
pub fn lemma1_check(m: &VertexSet) -> Result<(), Lemma1Violation> {
    let g = m.graph();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); g.height()];
    let mut cols: Vec<Vec<usize>> = vec![Vec::new(); g.width()];
    for v in m.iter() {
        rows[v.y].push(v.x);
        cols[v.x].push(v.y);
    }
    for (row, fibers) in [(true, &rows), (false, &cols)] {
        if let Some((index, f)) = fibers.iter().enumerate().find(|(_, f)| f.len() > 2) {
            return Err(Lemma1Violation::CrowdedFiber {
                row,
                index,
                count: f.len(),
            });
        }
    }
    if let Some(rows) = disjoint_full_fibers(&rows) {
        return Err(Lemma1Violation::RowSpansDisjoint { rows });
    }
    if let Some(columns) = disjoint_full_fibers(&cols) {
        return Err(Lemma1Violation::ColumnSpansDisjoint { columns });
    }
    let members = m.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            let dist = u.x.abs_diff(v.x) + u.y.abs_diff(v.y);
            if dist < 3 {
                return Err(Lemma1Violation::TooClose { pair: (u, v), dist });
            }
        }
    }
    Ok(())
}

fn disjoint_full_fibers(fibers: &[Vec<usize>]) -> Option<(usize, usize)> {
    let spans: Vec<(usize, usize, usize)> = fibers
        .iter()
        .enumerate()
        .filter(|(_, f)| f.len() == 2)
        .map(|(i, f)| (i, f[0].min(f[1]), f[0].max(f[1])))
        .collect();
    for (a, &(i, lo1, hi1)) in spans.iter().enumerate() {
        for &(j, lo2, hi2) in &spans[a + 1..] {
            if hi1 < lo2 || hi2 < lo1 {
                return Some((i, j));
            }
        }
    }
    None
}
