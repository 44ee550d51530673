//! Precomputed bitset tables for graphs of at most 128 vertices.
//!
//! Vertices are numbered row-major (`index = y * width + x`), so the branch
//! order of the search walks row 0 first.

use crate::grid::{ProductGraph, Vertex};

pub(crate) type Mask = u128;

pub(crate) const MAX_VERTICES: usize = Mask::BITS as usize;

#[inline]
pub(crate) fn bit(i: usize) -> Mask {
    1 << i
}

/// Iterates the set bits of a mask, lowest first.
#[inline]
pub(crate) fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

pub(crate) struct Space {
    pub n: usize,
    pub width: usize,
    nbr: Vec<Mask>,
    dist: Vec<u16>,
    /// `layers[a][k]`: vertices at distance `k` from `a`.
    layers: Vec<Vec<Mask>>,
    interval: Vec<Mask>,
    pub rows: Vec<Mask>,
    pub cols: Vec<Mask>,
    /// Most members a row (fixed `y`) or column (fixed `x`) can hold: the
    /// fibres are convex, so this is `μ` of the factor (2 for paths, 3 for cycles).
    pub row_cap: usize,
    pub col_cap: usize,
}

impl Space {
    pub fn new(graph: ProductGraph) -> Self {
        let n = graph.vertex_count();
        assert!(
            n <= MAX_VERTICES,
            "bitset space holds at most {MAX_VERTICES} vertices"
        );
        let (width, height) = (graph.width(), graph.height());
        let vertex = |i: usize| Vertex::new(i % width, i / width);
        let index = |v: Vertex| v.y * width + v.x;

        let nbr = (0..n)
            .map(|i| graph.neighbors(vertex(i)).fold(0, |m, w| m | bit(index(w))))
            .collect();
        let mut dist = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                dist[a * n + b] = graph.dist_unchecked(vertex(a), vertex(b)) as u16;
            }
        }
        let layers = (0..n)
            .map(|a| {
                let far = (0..n).map(|b| dist[a * n + b] as usize).max().unwrap_or(0);
                let mut ls = vec![0; far + 1];
                for b in 0..n {
                    ls[dist[a * n + b] as usize] |= bit(b);
                }
                ls
            })
            .collect();
        let mut interval = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let d = dist[a * n + b];
                interval[a * n + b] = (0..n)
                    .filter(|&w| dist[a * n + w] + dist[w * n + b] == d)
                    .fold(0, |m, w| m | bit(w));
            }
        }
        let rows = (0..height)
            .map(|y| (0..width).fold(0, |m, x| m | bit(y * width + x)))
            .collect();
        let cols = (0..width)
            .map(|x| (0..height).fold(0, |m, y| m | bit(y * width + x)))
            .collect();
        let cap = |cycle: bool| if cycle { 3 } else { 2 };
        Space {
            n,
            width,
            nbr,
            dist,
            layers,
            interval,
            rows,
            cols,
            row_cap: cap(graph.fx.is_cycle()),
            col_cap: cap(graph.fy.is_cycle()),
        }
    }

    #[inline]
    pub fn vertex(&self, i: usize) -> Vertex {
        Vertex::new(i % self.width, i / self.width)
    }

    #[inline]
    pub fn index(&self, v: Vertex) -> usize {
        v.y * self.width + v.x
    }

    /// Whether `a` reaches `b` along a shortest path avoiding `blockers`
    /// (endpoints excepted).
    #[inline]
    pub fn visible(&self, a: usize, b: usize, blockers: Mask) -> bool {
        let d = self.dist[a * self.n + b] as usize;
        if d <= 1 {
            return true;
        }
        let allowed = (self.interval[a * self.n + b] & !blockers) | bit(b);
        let layers = &self.layers[a];
        let mut front = bit(a);
        for layer in &layers[1..=d] {
            let mut next = 0;
            for w in bits(front) {
                next |= self.nbr[w];
            }
            front = next & allowed & layer;
            if front == 0 {
                return false;
            }
        }
        true
    }

    /// Given that `cur` is a mutual-visibility set, whether `cur + c` is one.
    /// Only pairs involving `c` and pairs whose interval contains `c` can change.
    pub fn can_add(&self, cur: Mask, c: usize) -> bool {
        let with = cur | bit(c);
        for m in bits(cur) {
            if !self.visible(c, m, with) {
                return false;
            }
        }
        let cb = bit(c);
        let mut rest = cur;
        while rest != 0 {
            let a = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let row = &self.interval[a * self.n..(a + 1) * self.n];
            for b in bits(rest) {
                if row[b] & cb != 0 && !self.visible(a, b, with) {
                    return false;
                }
            }
        }
        true
    }

    /// Full check of every pair of `set`.
    #[cfg(test)]
    pub fn is_mutual_visibility(&self, set: Mask) -> bool {
        let mut rest = set;
        while rest != 0 {
            let a = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if bits(rest).any(|b| !self.visible(a, b, set)) {
                return false;
            }
        }
        true
    }

    pub fn mask_of(&self, vs: impl IntoIterator<Item = Vertex>) -> Mask {
        vs.into_iter().fold(0, |m, v| m | bit(self.index(v)))
    }

    pub fn vertices_of(&self, m: Mask) -> impl Iterator<Item = Vertex> + '_ {
        bits(m).map(|i| self.vertex(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::VertexSet;
    use crate::visibility::is_mutual_visibility_set;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn agrees_with_reference_checker() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for desc in ["C4xC5", "P3xC4", "P4xP3", "C3xP5", "C6xC6"] {
            let g: ProductGraph = desc.parse().unwrap();
            let space = Space::new(g);
            for _ in 0..200 {
                let m: Mask = (0..space.n)
                    .filter(|_| rng.gen_bool(0.3))
                    .fold(0, |m, i| m | bit(i));
                let set = VertexSet::from_vertices(g, space.vertices_of(m)).unwrap();
                assert_eq!(
                    space.is_mutual_visibility(m),
                    is_mutual_visibility_set(&set).ok,
                    "{desc}"
                );
            }
        }
    }

    #[test]
    fn incremental_matches_full() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let space = Space::new("C5xC5".parse().unwrap());
        for _ in 0..300 {
            let mut cur: Mask = 0;
            for _ in 0..12 {
                let c = rng.gen_range(0..space.n);
                if cur & bit(c) != 0 {
                    continue;
                }
                let expect = space.is_mutual_visibility(cur | bit(c));
                assert_eq!(space.can_add(cur, c), expect);
                if expect {
                    cur |= bit(c);
                }
            }
        }
    }
}
