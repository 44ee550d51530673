//! Published mutual-visibility numbers for cylinders and tori.
//!
//! The two tables are stored as printed, with `0` standing for a ditto mark
//! (`-''-`) that repeats the value to its left, and `None` for an empty cell.

use std::fmt;

use crate::grid::{FactorKind, ProductGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    /// Computed table for `P_s □ C_t`, `t <= 17`.
    CylinderTable,
    /// Computed table for `C_s □ C_t`, `t <= 13`.
    TorusTable,
    /// `μ(P_2 □ C_t) = 4, 5, 5, 6` for `t = 3, 4, 5` and `t >= 6`.
    TwoPathCylinder,
    /// `μ(P_s □ C_t) = 2t` whenever `s + 1 >= t >= 6`.
    CylinderTheorem,
    /// `μ(C_s □ C_t) = 3t` whenever `s >= t` and `t >= 14` or `t = 12`.
    TorusTheorem,
    /// `μ(C_s □ C_t) = 3t` for `s` above a per-`t` threshold, `t <= 13`.
    SmallTorusThreshold,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Source::CylinderTable => "cylinder table",
            Source::TorusTable => "torus table",
            Source::TwoPathCylinder => "P2 x C_t values",
            Source::CylinderTheorem => "cylinder theorem (2t)",
            Source::TorusTheorem => "torus theorem (3t)",
            Source::SmallTorusThreshold => "small-t torus thresholds (3t)",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KnownValue {
    pub value: usize,
    pub source: Source,
}

/// Columns `s = 3..=12`, rows `t = 3..=17`.
const CYLINDER_TABLE: [[usize; 10]; 15] = [
    [6, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [7, 8, 0, 0, 0, 0, 0, 0, 0, 0],
    [7, 9, 10, 0, 0, 0, 0, 0, 0, 0],
    [8, 10, 12, 0, 0, 0, 0, 0, 0, 0],
    [8, 10, 12, 14, 0, 0, 0, 0, 0, 0],
    [9, 12, 14, 16, 0, 0, 0, 0, 0, 0],
    [9, 12, 14, 16, 17, 18, 0, 0, 0, 0],
    [9, 12, 15, 18, 19, 20, 0, 0, 0, 0],
    [9, 12, 15, 18, 19, 22, 0, 0, 0, 0],
    [9, 12, 15, 18, 21, 24, 0, 0, 0, 0],
    [9, 12, 15, 18, 21, 24, 26, 0, 0, 0],
    [9, 12, 15, 18, 21, 24, 27, 28, 0, 0],
    [9, 12, 15, 18, 21, 24, 27, 30, 0, 0],
    [9, 12, 15, 18, 21, 24, 27, 30, 32, 0],
    [9, 12, 15, 18, 21, 24, 27, 30, 33, 34],
];

/// Columns `s = 3..=14`, rows `t = 3..=13`.
const TORUS_TABLE: [[Option<usize>; 12]; 11] = {
    const N: Option<usize> = None;
    const D: Option<usize> = Some(0);
    const fn v(x: usize) -> Option<usize> {
        Some(x)
    }
    [
        [v(6), v(7), v(7), v(9), D, D, D, D, D, D, D, D],
        [N, v(9), v(10), v(11), v(11), v(12), D, D, D, D, D, D],
        [N, N, v(10), v(12), v(13), v(15), D, D, D, D, D, D],
        [N, N, N, v(14), v(15), v(17), v(18), D, D, D, D, D],
        [N, N, N, N, v(16), v(18), v(18), v(20), v(20), v(21), D, D],
        [N, N, N, N, N, v(21), v(21), v(23), v(23), v(24), D, D],
        [N, N, N, N, N, N, v(22), v(25), v(25), v(27), D, D],
        [N, N, N, N, N, N, N, v(27), v(27), v(30), D, D],
        [N, N, N, N, N, N, N, N, v(29), v(32), v(33), D],
        [N, N, N, N, N, N, N, N, N, v(36), D, D],
        [N, N, N, N, N, N, N, N, N, N, v(38), v(39)],
    ]
};

/// `(s_r, t)`: `μ(C_s □ C_t) = 3t` for every `s >= s_r`.
pub const SMALL_TORUS_THRESHOLDS: [(usize, usize); 10] = [
    (6, 3),
    (8, 4),
    (8, 5),
    (9, 6),
    (12, 7),
    (12, 8),
    (12, 9),
    (12, 10),
    (13, 11),
    (14, 13),
];

/// Value of the cylinder table at `(s, t)`, resolving ditto marks leftward;
/// `s > 12` repeats the last column.
pub fn cylinder_table(s: usize, t: usize) -> Option<usize> {
    if !(3..=17).contains(&t) || s < 3 {
        return None;
    }
    let row = &CYLINDER_TABLE[t - 3];
    let col = (s - 3).min(row.len() - 1);
    row[..=col].iter().rev().copied().find(|&v| v != 0)
}

/// Value of the torus table at `(s, t)` with `s >= t`, resolving ditto marks
/// leftward; `s > 14` repeats the last column.
pub fn torus_table(s: usize, t: usize) -> Option<usize> {
    if !(3..=13).contains(&t) || s < 3 {
        return None;
    }
    let row = &TORUS_TABLE[t - 3];
    let col = (s - 3).min(row.len() - 1);
    row[col]?;
    row[..=col]
        .iter()
        .rev()
        .flatten()
        .copied()
        .find(|&v| v != 0)
}

/// The published `μ` for `g`, if one covers it.
pub fn known_mu(g: &ProductGraph) -> Option<KnownValue> {
    use FactorKind::*;
    match (g.fx.kind(), g.fy.kind()) {
        (Path, Cycle) => known_cylinder(g.width(), g.height()),
        (Cycle, Path) => known_cylinder(g.height(), g.width()),
        (Cycle, Cycle) => {
            let (s, t) = (g.width().max(g.height()), g.width().min(g.height()));
            known_torus(s, t)
        }
        (Path, Path) => None,
    }
}

fn known_cylinder(s: usize, t: usize) -> Option<KnownValue> {
    let hit = |value, source| Some(KnownValue { value, source });
    if s == 2 {
        return hit(
            match t {
                3 => 4,
                4 | 5 => 5,
                _ => 6,
            },
            Source::TwoPathCylinder,
        );
    }
    if let Some(value) = cylinder_table(s, t) {
        return hit(value, Source::CylinderTable);
    }
    if t >= 6 && s + 1 >= t {
        return hit(2 * t, Source::CylinderTheorem);
    }
    None
}

fn known_torus(s: usize, t: usize) -> Option<KnownValue> {
    let hit = |value, source| Some(KnownValue { value, source });
    if let Some(value) = torus_table(s, t) {
        return hit(value, Source::TorusTable);
    }
    if t == 12 || t >= 14 {
        return hit(3 * t, Source::TorusTheorem);
    }
    if SMALL_TORUS_THRESHOLDS
        .iter()
        .any(|&(sr, tt)| tt == t && s >= sr)
    {
        return hit(3 * t, Source::SmallTorusThreshold);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mu(desc: &str) -> Option<usize> {
        known_mu(&desc.parse().unwrap()).map(|k| k.value)
    }

    #[test]
    fn cylinder_lookups() {
        // row t = 4 reads 7, 8, ditto...
        assert_eq!(mu("P5xC4"), Some(8));
        assert_eq!(mu("P4xC5"), Some(9));
        assert_eq!(mu("P3xC3"), Some(6));
        assert_eq!(mu("P12xC17"), Some(34));
        assert_eq!(mu("P40xC17"), Some(34));
        assert_eq!(mu("C5xP4"), Some(9));
        assert_eq!(mu("P2xC9"), Some(6));
        assert_eq!(mu("P2xC3"), Some(4));
        assert_eq!(mu("P19xC20"), Some(40));
        assert_eq!(mu("P10xC20"), None);
        assert_eq!(mu("P3xP3"), None);
    }

    #[test]
    fn torus_lookups() {
        assert_eq!(mu("C6xC3"), Some(9));
        assert_eq!(mu("C3xC6"), Some(9));
        assert_eq!(mu("C4xC5"), Some(10));
        assert_eq!(mu("C13xC13"), Some(38));
        assert_eq!(mu("C14xC13"), Some(39));
        assert_eq!(mu("C40xC15"), Some(45));
        assert_eq!(mu("C12xC12"), Some(36));
        assert_eq!(mu("C20xC7"), Some(21));
        let k = known_mu(&"C40xC15".parse().unwrap()).unwrap();
        assert_eq!(k.source, Source::TorusTheorem);
    }

    #[test]
    fn last_entry_per_row_is_the_upper_bound() {
        for t in 3..=17 {
            assert_eq!(cylinder_table(12, t), Some(2 * t), "t={t}");
        }
        for t in 3..=13 {
            assert_eq!(torus_table(14, t), Some(3 * t), "t={t}");
        }
    }

    #[test]
    fn rows_are_monotone_and_bounded() {
        for t in 3..=17 {
            let mut prev = 0;
            for s in 3..=12 {
                let v = cylinder_table(s, t).unwrap();
                assert!(v >= prev && v <= (3 * s).min(2 * t), "P{s}xC{t} = {v}");
                prev = v;
            }
        }
        for t in 3..=13 {
            let mut prev = 0;
            for s in t.max(3)..=14 {
                let v = torus_table(s, t).unwrap();
                assert!(v >= prev && v <= 3 * t, "C{s}xC{t} = {v}");
                prev = v;
            }
        }
    }

    #[test]
    fn thresholds_agree_with_table() {
        for &(sr, t) in &SMALL_TORUS_THRESHOLDS {
            assert_eq!(torus_table(sr, t), Some(3 * t), "threshold ({sr}, {t})");
            if sr > t {
                assert!(torus_table(sr - 1, t).unwrap() < 3 * t);
            }
        }
    }
}
