//! `2t`-vertex mutual-visibility sets of the cylinder `P_{t-1} □ C_t`.
//!
//! A two-per-fibre base set on `P_{t-3} □ C_{t-3}` is shifted one column right
//! and split into three row bands; the bands are pushed apart by one empty row
//! each, and the six boundary vertices of `B` fill column 0, column `t - 2`
//! and the three separating rows.

use std::collections::BTreeSet;

use crate::constructions::Family;
use crate::error::{Error, Result};
use crate::grid::{ProductGraph, Vertex};
use crate::set::VertexSet;

/// Parameters of the band assembly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CylinderLayout {
    /// Offset between the two base points of a row, modulo `t - 3`.
    pub stride: usize,
    /// Rows holding the boundary vertices besides row 0.
    pub first_gap: usize,
    pub second_gap: usize,
}

impl CylinderLayout {
    /// The layout used by the closed-form family for `t`.
    pub fn standard(t: usize) -> Self {
        let stride = if t % 2 == 1 {
            2 * ((t - 3) / 4) + 1
        } else {
            t - 8
        };
        CylinderLayout {
            stride,
            first_gap: t.div_ceil(3),
            second_gap: (2 * t).div_ceil(3),
        }
    }

    /// Every layout with `1 <= stride < t - 3` and
    /// `2 <= first_gap < second_gap - 1 <= t - 3`.
    pub fn all(t: usize) -> impl Iterator<Item = CylinderLayout> {
        let period = t.saturating_sub(3);
        (1..period).flat_map(move |stride| {
            (2..t.saturating_sub(1)).flat_map(move |first_gap| {
                (first_gap + 2..t.saturating_sub(1)).map(move |second_gap| CylinderLayout {
                    stride,
                    first_gap,
                    second_gap,
                })
            })
        })
    }
}

fn base_point(i: usize, j: usize, stride: usize, period: usize) -> usize {
    (2 * i + j * stride) % period
}

/// The base set `M'` on `P_{t-3} □ C_{t-3}`: two points per row and column.
pub fn construct_torus_base(t: usize) -> Result<VertexSet> {
    Family::for_cylinder(t).require(t)?;
    let period = t - 3;
    let stride = CylinderLayout::standard(t).stride;
    let graph = ProductGraph::cylinder(period, period)?;
    let points = (0..period)
        .flat_map(|i| (0..2).map(move |j| Vertex::new(base_point(i, j, stride, period), i)));
    VertexSet::from_vertices(graph, points)
}

/// The closed-form `2t` set on `P_{t-1} □ C_t`, for `t >= 13`.
pub fn construct_cylinder(t: usize) -> Result<VertexSet> {
    Family::for_cylinder(t).require(t)?;
    assemble_cylinder(t, CylinderLayout::standard(t))
}

/// Band assembly on `P_{t-1} □ C_t` for an arbitrary layout. Fails with an
/// input error when two generated points coincide or leave the grid.
pub fn assemble_cylinder(t: usize, layout: CylinderLayout) -> Result<VertexSet> {
    if t < 6 {
        return Err(Error::input(format!(
            "cylinder assembly needs t >= 6, got {t}"
        )));
    }
    let CylinderLayout {
        stride,
        first_gap: a,
        second_gap: b,
    } = layout;
    if !(2 <= a && a + 2 <= b && b <= t - 2) {
        return Err(Error::input(format!(
            "invalid band rows {a}, {b} for t = {t}"
        )));
    }
    let period = t - 3;
    let graph = ProductGraph::cylinder(t - 1, t)?;
    let mut points = BTreeSet::new();
    for y in [0, a, b] {
        points.insert(Vertex::new(0, y));
        points.insert(Vertex::new(t - 2, y));
    }
    for i in 0..period {
        // row i of the base lands in band 1, 2 or 3
        let shift = if i + 1 < a {
            1
        } else if i + 2 < b {
            2
        } else {
            3
        };
        for j in 0..2 {
            let x = base_point(i, j, stride, period) + 1;
            if !points.insert(Vertex::new(x, i + shift)) {
                return Err(Error::input(format!(
                    "layout {layout:?} repeats a vertex for t = {t}"
                )));
            }
        }
    }
    let set = VertexSet::from_vertices(graph, points)?;
    debug_assert_eq!(set.len(), 2 * t);
    Ok(set)
}

/// Reinterprets a set of `P_k □ C_t` on the longer cylinder `P_s □ C_t`.
pub fn embed_cylinder(m: &VertexSet, s: usize) -> Result<VertexSet> {
    let g = m.graph();
    if g.fx.is_cycle() || !g.fy.is_cycle() {
        return Err(Error::input(format!("{g} is not a cylinder P_k x C_t")));
    }
    if s <= g.width() {
        return Err(Error::input(format!(
            "embedding needs a longer path: s = {s} but the set lives on P{}",
            g.width()
        )));
    }
    m.reinterpret(ProductGraph::cylinder(s, g.height())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn band_rows_partition_the_base() {
        for t in 13..30 {
            let m = construct_cylinder(t).unwrap();
            assert_eq!(m.len(), 2 * t, "t={t}");
            assert_eq!(m.graph().to_string(), format!("P{}xC{t}", t - 1));
            // every row holds exactly two members
            for y in 0..t {
                assert_eq!(m.iter().filter(|v| v.y == y).count(), 2, "t={t} row {y}");
            }
        }
    }

    #[test]
    fn boundary_vertices_present() {
        let t = 13;
        let m = construct_cylinder(t).unwrap();
        for y in [0, 5, 9] {
            assert!(m.contains(Vertex::new(0, y)));
            assert!(m.contains(Vertex::new(t - 2, y)));
        }
    }

    #[test]
    fn base_two_per_fibre() {
        for t in [13, 14, 15, 16] {
            let base = construct_torus_base(t).unwrap();
            assert_eq!(base.len(), 2 * (t - 3));
            for c in 0..t - 3 {
                assert_eq!(base.iter().filter(|v| v.y == c).count(), 2);
                assert_eq!(base.iter().filter(|v| v.x == c).count(), 2);
            }
        }
    }

    #[test]
    fn even_base_row_pairs() {
        // t - 8 apart, or 5 when the offset wraps modulo t - 3
        for t in [14, 16, 18, 20] {
            let base = construct_torus_base(t).unwrap();
            let g = *base.graph();
            for y in 0..t - 3 {
                let row: Vec<_> = base.iter().filter(|v| v.y == y).collect();
                let d = g.dist(row[0], row[1]).unwrap();
                assert!(d == t - 8 || d == 5, "t={t} y={y} d={d}");
            }
        }
    }

    #[test]
    fn too_small_is_unsupported() {
        assert!(matches!(
            construct_cylinder(12),
            Err(Error::UnsupportedSize { .. })
        ));
        assert!(matches!(
            construct_torus_base(12),
            Err(Error::UnsupportedSize { .. })
        ));
    }

    #[test]
    fn embed_requires_longer_path() {
        let m = construct_cylinder(13).unwrap();
        assert!(embed_cylinder(&m, 12).is_err());
        let e = embed_cylinder(&m, 20).unwrap();
        assert_eq!(e.len(), 26);
        assert_eq!(e.graph().to_string(), "P20xC13");
    }
}
