//! Slow reference implementations used as test oracles. They rely only on
//! adjacency and breadth-first search, never on the library's interval or
//! visibility code.

#![allow(dead_code)]

use std::collections::VecDeque;

use mutvis::{ProductGraph, Vertex, VertexSet};

pub fn all_products(max_order: usize) -> Vec<ProductGraph> {
    let mut out = Vec::new();
    for s in 2..=max_order {
        for t in 2..=max_order {
            out.push(ProductGraph::grid(s, t).unwrap());
            if t >= 3 {
                out.push(ProductGraph::cylinder(s, t).unwrap());
            }
            if s >= 3 {
                out.push(ProductGraph::cylinder(t, s).unwrap().transpose());
            }
            if s >= 3 && t >= 3 {
                out.push(ProductGraph::torus(s, t).unwrap());
            }
        }
    }
    out.dedup();
    out
}

/// Distances from `u` to every vertex, indexed by `g.index`.
pub fn bfs(g: &ProductGraph, u: Vertex) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[g.index(u)] = 0;
    let mut queue = VecDeque::from([u]);
    while let Some(w) = queue.pop_front() {
        let d = dist[g.index(w)];
        for x in g.neighbors(w) {
            if dist[g.index(x)] == usize::MAX {
                dist[g.index(x)] = d + 1;
                queue.push_back(x);
            }
        }
    }
    dist
}

pub struct Oracle {
    pub g: ProductGraph,
    dist: Vec<Vec<usize>>,
}

impl Oracle {
    pub fn new(g: ProductGraph) -> Self {
        let dist = g.vertices().map(|u| bfs(&g, u)).collect();
        Oracle { g, dist }
    }

    pub fn d(&self, u: Vertex, v: Vertex) -> usize {
        self.dist[self.g.index(u)][self.g.index(v)]
    }

    /// `I(u, v)` by geodesic membership, in the graph's vertex order.
    pub fn interval(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        let d = self.d(u, v);
        self.g
            .vertices()
            .filter(|&w| self.d(u, w) + self.d(w, v) == d)
            .collect()
    }

    /// Every shortest `u,v`-path, built by walking neighbours one step closer to `v`.
    pub fn paths(&self, u: Vertex, v: Vertex) -> Vec<Vec<Vertex>> {
        let mut out = Vec::new();
        let mut path = vec![u];
        self.walk(v, &mut path, &mut out);
        out
    }

    fn walk(&self, v: Vertex, path: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        let w = *path.last().unwrap();
        if w == v {
            out.push(path.clone());
            return;
        }
        for x in self.g.neighbors(w) {
            if self.d(x, v) + 1 == self.d(w, v) {
                path.push(x);
                self.walk(v, path, out);
                path.pop();
            }
        }
    }

    pub fn visible(&self, m: &[Vertex], u: Vertex, v: Vertex) -> bool {
        self.paths(u, v)
            .iter()
            .any(|p| p[1..p.len() - 1].iter().all(|w| !m.contains(w)))
    }

    pub fn is_mv(&self, m: &[Vertex]) -> bool {
        m.iter()
            .enumerate()
            .all(|(i, &u)| m[i + 1..].iter().all(|&v| self.visible(m, u, v)))
    }

    /// `μ` by trying every subset, largest first. Only for tiny graphs.
    pub fn brute_mu(&self) -> usize {
        let vs: Vec<Vertex> = self.g.vertices().collect();
        let n = vs.len();
        assert!(n <= 16, "subset enumeration on {n} vertices");
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            let m: Vec<Vertex> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| vs[i])
                .collect();
            if self.is_mv(&m) {
                best = size;
            }
        }
        best
    }
}

pub fn set(g: ProductGraph, vs: &[Vertex]) -> VertexSet {
    VertexSet::from_vertices(g, vs.iter().copied()).unwrap()
}
