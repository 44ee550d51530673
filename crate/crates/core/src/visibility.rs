//! Ground-truth mutual-visibility checks.
//!
//! Two members `u`, `v` of `M` see each other when some shortest `u,v`-path has
//! no interior vertex in `M`. Every shortest path stays inside `I(u, v)`, which
//! is the product of one geodesic span per factor, so the shortest-path DAG is
//! the product of two layered spans. A single sweep over that grid in
//! increasing distance from `u` decides reachability of `v`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{ProductGraph, Vertex, NO_PRED};
use crate::set::VertexSet;

/// Default distance cap for [`brute_force_paths`].
pub const DEFAULT_PATH_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VisibilityReport {
    pub ok: bool,
    pub failing_pair: Option<(Vertex, Vertex)>,
    pub pairs_checked: usize,
}

/// Whether `u` and `v` are `m`-visible, i.e. joined by a shortest path whose
/// interior avoids `m`. `u` and `v` themselves need not belong to `m`.
pub fn is_visible(m: &VertexSet, u: Vertex, v: Vertex) -> Result<bool> {
    let g = m.graph();
    g.check(u)?;
    g.check(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(unhindered(g, m, u, v))
}

pub(crate) fn unhindered(g: &ProductGraph, m: &VertexSet, u: Vertex, v: Vertex) -> bool {
    let sx = g.fx.span(u.x, v.x);
    let sy = g.fy.span(u.y, v.y);
    let (nx, ny) = (sx.coords.len(), sy.coords.len());
    let mut reach = vec![false; nx * ny];
    for ix in 0..nx {
        for iy in 0..ny {
            let cell = ix * ny + iy;
            if cell == 0 {
                reach[0] = true;
                continue;
            }
            let w = Vertex::new(sx.coords[ix], sy.coords[iy]);
            if w != v && m.contains_index(g.index(w)) {
                continue;
            }
            let from_x = sx.preds[ix]
                .iter()
                .any(|&p| p != NO_PRED && reach[p * ny + iy]);
            let from_y = sy.preds[iy]
                .iter()
                .any(|&p| p != NO_PRED && reach[ix * ny + p]);
            reach[cell] = from_x || from_y;
        }
    }
    reach[nx * ny - 1]
}

/// Checks every unordered pair of `m`. On failure the reported pair is the
/// lexicographically first one by `(u.x, u.y, v.x, v.y)`.
pub fn is_mutual_visibility_set(m: &VertexSet) -> VisibilityReport {
    let g = m.graph();
    let members = m.to_vec();
    let n = members.len();
    let failure = (0..n).into_par_iter().find_map_first(|i| {
        ((i + 1)..n)
            .find(|&j| !unhindered(g, m, members[i], members[j]))
            .map(|j| (i, j))
    });
    match failure {
        None => VisibilityReport {
            ok: true,
            failing_pair: None,
            pairs_checked: n * n.saturating_sub(1) / 2,
        },
        Some((i, j)) => {
            let before: usize = (0..i).map(|a| n - 1 - a).sum();
            VisibilityReport {
                ok: false,
                failing_pair: Some((members[i], members[j])),
                pairs_checked: before + (j - i),
            }
        }
    }
}

/// Given that `m` is a mutual-visibility set, whether `m + w` still is one.
/// Only pairs involving `w` and pairs whose interval contains `w` can change.
pub(crate) fn can_extend(m: &VertexSet, w: Vertex) -> bool {
    let g = m.graph();
    let mut with = m.clone();
    if with.insert(w).is_err() {
        return false;
    }
    let members = m.to_vec();
    if members.iter().any(|&a| !unhindered(g, &with, w, a)) {
        return false;
    }
    members.iter().enumerate().all(|(i, &a)| {
        members[i + 1..].iter().all(|&b| {
            let on_geodesic =
                g.dist_unchecked(a, w) + g.dist_unchecked(w, b) == g.dist_unchecked(a, b);
            !on_geodesic || unhindered(g, &with, a, b)
        })
    })
}

/// Every shortest `u,v`-path, listed explicitly. Intended as a test oracle.
pub fn brute_force_paths(g: &ProductGraph, u: Vertex, v: Vertex) -> Result<Vec<Vec<Vertex>>> {
    brute_force_paths_capped(g, u, v, DEFAULT_PATH_CAP)
}

pub fn brute_force_paths_capped(
    g: &ProductGraph,
    u: Vertex,
    v: Vertex,
    cap: usize,
) -> Result<Vec<Vec<Vertex>>> {
    let total = g.dist(u, v)?;
    if total > cap {
        return Err(Error::PathCapExceeded { dist: total, cap });
    }
    let mut out = Vec::new();
    let mut path = vec![u];
    extend_paths(g, v, total, &mut path, &mut out);
    Ok(out)
}

fn extend_paths(
    g: &ProductGraph,
    v: Vertex,
    remaining: usize,
    path: &mut Vec<Vertex>,
    out: &mut Vec<Vec<Vertex>>,
) {
    let here = *path.last().expect("path starts non-empty");
    if remaining == 0 {
        out.push(path.clone());
        return;
    }
    let mut next: Vec<Vertex> = g
        .neighbors(here)
        .filter(|&w| g.dist_unchecked(w, v) + 1 == remaining)
        .collect();
    next.sort();
    next.dedup();
    for w in next {
        path.push(w);
        extend_paths(g, v, remaining - 1, path, out);
        path.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(desc: &str, vs: &[(usize, usize)]) -> VertexSet {
        VertexSet::from_vertices(desc.parse().unwrap(), vs.iter().copied()).unwrap()
    }

    fn v(x: usize, y: usize) -> Vertex {
        Vertex::new(x, y)
    }

    #[test]
    fn visible_examples() {
        let m = set("P2xC3", &[(0, 0), (1, 1)]);
        assert!(is_visible(&m, v(0, 0), v(1, 1)).unwrap());

        // the diagonal does not block: paths go around the corner
        let m = set("P3xP3", &[(0, 0), (1, 1), (2, 2)]);
        assert!(is_visible(&m, v(0, 0), v(2, 2)).unwrap());
        let m = set("P3xP3", &[(0, 0), (1, 0), (0, 1), (2, 2)]);
        assert!(!is_visible(&m, v(0, 0), v(2, 2)).unwrap());

        let m = set("C4xC4", &[(0, 0), (2, 2)]);
        assert!(is_visible(&m, v(0, 0), v(2, 2)).unwrap());
    }

    #[test]
    fn visible_errors() {
        let m = set("C4xC4", &[(0, 0)]);
        assert!(matches!(
            is_visible(&m, v(0, 0), v(0, 0)),
            Err(Error::SameVertex(_))
        ));
        assert!(is_visible(&m, v(0, 0), v(4, 0)).is_err());
    }

    #[test]
    fn antipodal_blocking_needs_both_arcs() {
        // On C4, 0 and 2 are joined by the arcs through 1 and through 3.
        let m = set("C4xP2", &[(0, 0), (2, 0), (1, 0)]);
        assert!(is_visible(&m, v(0, 0), v(2, 0)).unwrap());
        let m = set("C4xP2", &[(0, 0), (2, 0), (1, 0), (3, 0)]);
        assert!(!is_visible(&m, v(0, 0), v(2, 0)).unwrap());
    }

    #[test]
    fn report_vacuous_and_failing() {
        let empty = VertexSet::new("C5xC5".parse().unwrap());
        let r = is_mutual_visibility_set(&empty);
        assert!(r.ok && r.failing_pair.is_none() && r.pairs_checked == 0);

        let single = set("C5xC5", &[(3, 3)]);
        assert!(is_mutual_visibility_set(&single).ok);

        let corner = set("P3xP3", &[(0, 0), (1, 0), (0, 1), (2, 2)]);
        let r = is_mutual_visibility_set(&corner);
        assert!(!r.ok);
        assert_eq!(r.failing_pair, Some((v(0, 0), v(2, 2))));
        assert_eq!(r.pairs_checked, 3);
    }

    #[test]
    fn failing_pair_is_lexicographically_first() {
        // A full 3x3 block: (0,0)-(0,2) is blocked by (0,1) and is the first pair.
        let all: Vec<_> = (0..3).flat_map(|x| (0..3).map(move |y| (x, y))).collect();
        let m = set("P3xP3", &all);
        let r = is_mutual_visibility_set(&m);
        assert_eq!(r.failing_pair, Some((v(0, 0), v(0, 2))));
        assert_eq!(r.pairs_checked, 2);
    }

    #[test]
    fn path_counts() {
        let g: ProductGraph = "P3xP3".parse().unwrap();
        assert_eq!(brute_force_paths(&g, v(0, 0), v(2, 2)).unwrap().len(), 6);
        let g: ProductGraph = "P2xP2".parse().unwrap();
        assert_eq!(brute_force_paths(&g, v(0, 0), v(1, 1)).unwrap().len(), 2);
        let g: ProductGraph = "C4xP2".parse().unwrap();
        assert_eq!(brute_force_paths(&g, v(0, 0), v(2, 1)).unwrap().len(), 6);
    }

    #[test]
    fn path_cap_refusal() {
        let g: ProductGraph = "P10xP10".parse().unwrap();
        assert!(matches!(
            brute_force_paths(&g, v(0, 0), v(9, 9)),
            Err(Error::PathCapExceeded { dist: 18, cap: 12 })
        ));
        assert!(brute_force_paths_capped(&g, v(0, 0), v(9, 9), 18).is_ok());
    }
}
