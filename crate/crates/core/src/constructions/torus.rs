//! Closed-form `3t` mutual-visibility sets of `C_t □ C_t`, one family per
//! residue of `t` modulo 6.

use std::collections::BTreeSet;

use crate::constructions::Family;
use crate::error::Result;
use crate::grid::{ProductGraph, Vertex};
use crate::set::VertexSet;

/// The residue family's set for `C_t □ C_t`, whatever the size of `t`.
///
/// Below the family threshold the result is not guaranteed to be a
/// mutual-visibility set (and may have fewer than `3t` points); callers that
/// need the guarantee use [`construct_torus_square`].
pub fn torus_formula(t: usize) -> Vec<Vertex> {
    let mut out = BTreeSet::new();
    let mut put = |x: usize, y: usize| {
        out.insert(Vertex::new(x % t, y % t));
    };
    match t % 6 {
        3 => {
            let k = t / 3;
            for i in 0..t {
                for j in 0..3 {
                    put(2 * i + j * k, i);
                }
            }
        }
        0 => {
            let k = t / 3;
            for i in 0..k / 2 {
                for j in 0..3 {
                    for l in 0..3 {
                        put(i + j * k, 2 * i + l * k);
                        put(k - i - 1 + j * k, 2 * i + 3 + l * k);
                    }
                }
            }
        }
        r => {
            // Rows alternate: even rows start at 0, odd rows at `half`, and
            // each row holds three points `stride` apart.
            let k = (t - 1 - usize::from(r == 5 || r == 2)) / 3;
            let (stride, half, even_rows, odd_rows) = match r {
                5 => (k + 1, (3 * k + 3) / 2, (3 * k + 3) / 2, (3 * k).div_ceil(2)),
                1 => (k, (3 * k + 2) / 2, (3 * k + 2) / 2, 3 * k / 2),
                2 => (k + 1, (3 * k + 2) / 2, (3 * k + 2) / 2, (3 * k + 2) / 2),
                4 => (
                    k,
                    (3 * k).div_ceil(2),
                    (3 * k).div_ceil(2),
                    (3 * k).div_ceil(2),
                ),
                _ => unreachable!(),
            };
            for j in 0..3 {
                for i in 0..even_rows {
                    put(i + j * stride, 2 * i);
                }
                for i in 0..odd_rows {
                    put(i + half + j * stride, 2 * i + 1);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// The second description each family is given alongside its row form:
/// column-by-column for `t ≡ 1, 3, 5`, and a nine-block decomposition for
/// `t ≡ 2, 4`. `t ≡ 0` has none.
pub fn torus_restated(t: usize) -> Option<Vec<Vertex>> {
    let mut out = BTreeSet::new();
    let mut put = |x: usize, y: usize, modulus: usize| {
        out.insert(Vertex::new(x % t, (y % modulus) % t));
    };
    match t % 6 {
        3 => {
            let k = t / 3;
            for i in 0..t {
                for j in 0..3 {
                    put(i, k.div_ceil(2) * i + j * k, t);
                }
            }
        }
        5 => {
            let k = (t - 2) / 3;
            for i in 0..t {
                for j in 0..3 {
                    put(i, 2 * i + j * k, t);
                }
            }
        }
        1 => {
            let k = (t - 1) / 3;
            for i in 0..t {
                for j in 0..3 {
                    put(i, 2 * i + j * (k + 1), t);
                }
            }
        }
        2 => {
            // the third column offset in each block wraps modulo 3k + 1
            let k = (t - 2) / 3;
            let m = 3 * k + 1;
            for i in 0..=k {
                put(i, 2 * i, t);
                put(i, 2 * i + k + 1, t);
                put(i, 2 * i + 2 * k, m);
                put(i + k + 1, 2 * i, t);
                put(i + k + 1, 2 * i + k + 1, t);
                put(i + k + 1, 2 * i + 2 * k + 2, m);
            }
            for i in 0..k {
                put(i + 2 * k + 2, 2 * i, t);
                put(i + 2 * k + 2, 2 * i + k + 3, t);
                put(i + 2 * k + 2, 2 * i + 2 * k + 2, m);
            }
        }
        4 => {
            let k = (t - 1) / 3;
            let m = 3 * k;
            for i in 0..k {
                put(i, 2 * i, t);
                put(i, 2 * i + k + 2, t);
                put(i, 2 * i + 2 * k + 2, m);
                put(i + k, 2 * i, t);
                put(i + k, 2 * i + k + 2, t);
                put(i + k, 2 * i + 2 * k, m);
            }
            for i in 0..=k {
                put(i + 2 * k, 2 * i, t);
                put(i + 2 * k, 2 * i + k, t);
                put(i + 2 * k, 2 * i + 2 * k, m);
            }
        }
        _ => return None,
    }
    Some(out.into_iter().collect())
}

/// A `3t`-vertex mutual-visibility set of `C_t □ C_t`.
pub fn construct_torus_square(t: usize) -> Result<VertexSet> {
    let family = Family::for_torus(t);
    family.require(t)?;
    let graph = ProductGraph::torus(t, t)?;
    let set = VertexSet::from_vertices(graph, torus_formula(t))?;
    debug_assert_eq!(set.len(), 3 * t);
    Ok(set)
}

/// Member pairs closer than distance 3 (the families for `t ≡ 2, 4` have
/// exactly three such pairs; the others have none).
pub fn cross_pairs(m: &VertexSet) -> Vec<(Vertex, Vertex)> {
    let g = m.graph();
    let members = m.to_vec();
    let mut out = Vec::new();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if g.dist_unchecked(u, v) < 3 {
                out.push((u, v));
            }
        }
    }
    out
}

/// The cross pairs the `t ≡ 2` and `t ≡ 4` families are built around,
/// sorted. Empty for other residues.
pub fn expected_cross_pairs(t: usize) -> Vec<(Vertex, Vertex)> {
    let v = Vertex::new;
    let mut pairs = match t % 6 {
        2 => {
            let k = (t - 2) / 3;
            let top = 3 * k + 1;
            vec![
                (v(0, 0), v(top, top)),
                (v(k, top), v(k + 1, 0)),
                (v(2 * k + 1, top), v(2 * k + 2, 0)),
            ]
        }
        4 => {
            let k = (t - 1) / 3;
            let top = 3 * k;
            vec![
                (v(0, 0), v(top, top)),
                (v(k - 1, top), v(k, 0)),
                (v(2 * k - 1, top), v(2 * k, 0)),
            ]
        }
        _ => Vec::new(),
    };
    pairs.sort();
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn mod3_rows_match_the_formula() {
        // t = 15, k = 5: row i holds {2i, 2i+5, 2i+10} mod 15.
        let m = construct_torus_square(15).unwrap();
        assert_eq!(m.len(), 45);
        for i in 0..15 {
            let mut row: Vec<usize> = m.iter().filter(|v| v.y == i).map(|v| v.x).collect();
            let mut want = vec![(2 * i) % 15, (2 * i + 5) % 15, (2 * i + 10) % 15];
            row.sort();
            want.sort();
            assert_eq!(row, want, "row {i}");
        }
    }

    #[test]
    fn cardinality_three_t_at_thresholds() {
        for t in [15, 18, 17, 19, 20, 22] {
            assert_eq!(construct_torus_square(t).unwrap().len(), 3 * t);
        }
    }

    #[test]
    fn below_threshold_is_unsupported() {
        for t in [9, 12, 11, 13, 14, 16] {
            assert!(
                matches!(
                    construct_torus_square(t),
                    Err(Error::UnsupportedSize { .. })
                ),
                "t={t}"
            );
        }
    }

    #[test]
    fn both_descriptions_agree() {
        for t in 15..=40 {
            if !Family::for_torus(t).applies(t) {
                continue;
            }
            if let Some(alt) = torus_restated(t) {
                assert_eq!(alt, torus_formula(t), "t={t}");
            }
        }
    }

    #[test]
    fn cross_pairs_match_the_listed_ones() {
        for t in [20, 26, 32, 38, 22, 28, 34, 40] {
            let m = construct_torus_square(t).unwrap();
            assert_eq!(cross_pairs(&m), expected_cross_pairs(t), "t={t}");
        }
        for t in [15, 17, 18, 19, 21, 23, 24, 25] {
            assert!(
                cross_pairs(&construct_torus_square(t).unwrap()).is_empty(),
                "t={t}"
            );
        }
    }

    #[test]
    fn mod2_cross_pair_distance_two() {
        let m = construct_torus_square(20).unwrap();
        let g = m.graph();
        let k = 6;
        let far = Vertex::new(3 * k + 1, 3 * k + 1);
        assert!(m.contains(far));
        assert_eq!(g.dist(Vertex::new(0, 0), far).unwrap(), 2);
    }
}
