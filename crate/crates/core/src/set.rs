//! Dense vertex sets over a product graph, plus their JSON and grid forms.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{ProductGraph, Vertex};

/// A candidate mutual-visibility set: one bit per vertex of `graph`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    graph: ProductGraph,
    bits: Vec<u64>,
    len: usize,
}

#[derive(Serialize, Deserialize)]
struct SetFile {
    graph: ProductGraph,
    set: Vec<[usize; 2]>,
}

impl VertexSet {
    pub fn new(graph: ProductGraph) -> Self {
        VertexSet {
            graph,
            bits: vec![0; graph.vertex_count().div_ceil(64)],
            len: 0,
        }
    }

    /// Builds a set, rejecting out-of-range and repeated vertices.
    pub fn from_vertices<I>(graph: ProductGraph, vertices: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<Vertex>,
    {
        let mut set = Self::new(graph);
        for v in vertices {
            let v = v.into();
            if !set.insert(v)? {
                return Err(Error::DuplicateVertex(v));
            }
        }
        Ok(set)
    }

    pub fn graph(&self) -> &ProductGraph {
        &self.graph
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Adds `v`; returns whether it was newly inserted.
    pub fn insert(&mut self, v: Vertex) -> Result<bool> {
        self.graph.check(v)?;
        let i = self.graph.index(v);
        let (word, mask) = (i / 64, 1u64 << (i % 64));
        let fresh = self.bits[word] & mask == 0;
        if fresh {
            self.bits[word] |= mask;
            self.len += 1;
        }
        Ok(fresh)
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        if !self.graph.contains(v) {
            return false;
        }
        let i = self.graph.index(v);
        let (word, mask) = (i / 64, 1u64 << (i % 64));
        let present = self.bits[word] & mask != 0;
        if present {
            self.bits[word] &= !mask;
            self.len -= 1;
        }
        present
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        self.graph.contains(v) && self.contains_index(self.graph.index(v))
    }

    #[inline]
    pub(crate) fn contains_index(&self, i: usize) -> bool {
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    /// Members in lexicographic `(x, y)` order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits.iter().enumerate().flat_map(move |(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(self.graph.vertex(w * 64 + b))
            })
        })
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    /// The same coordinate pairs on another graph.
    pub fn reinterpret(&self, graph: ProductGraph) -> Result<Self> {
        Self::from_vertices(graph, self.iter())
    }

    /// Swaps the roles of the two coordinates.
    pub fn transpose(&self) -> Self {
        Self::from_vertices(
            self.graph.transpose(),
            self.iter().map(|v| Vertex::new(v.y, v.x)),
        )
        .expect("transposed vertices stay in range")
    }

    pub fn to_json(&self) -> String {
        let file = SetFile {
            graph: self.graph,
            set: self.iter().map(|v| [v.x, v.y]).collect(),
        };
        serde_json::to_string(&file).expect("set serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: SetFile = serde_json::from_str(text)?;
        Self::from_vertices(
            file.graph,
            file.set.into_iter().map(|[x, y]| Vertex::new(x, y)),
        )
    }

    /// ASCII matrix: one line per `y` (row 0 first), one column per `x`.
    pub fn to_grid(&self) -> String {
        let mut out = String::with_capacity((self.graph.width() + 1) * self.graph.height());
        for y in 0..self.graph.height() {
            for x in 0..self.graph.width() {
                out.push(if self.contains(Vertex::new(x, y)) {
                    '#'
                } else {
                    '.'
                });
            }
            out.push('\n');
        }
        out
    }

    pub fn from_grid(graph: ProductGraph, text: &str) -> Result<Self> {
        let rows: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .collect();
        if rows.len() != graph.height() {
            return Err(Error::input(format!(
                "grid has {} rows, {graph} needs {}",
                rows.len(),
                graph.height()
            )));
        }
        let mut set = Self::new(graph);
        for (y, row) in rows.iter().enumerate() {
            if row.chars().count() != graph.width() {
                return Err(Error::input(format!(
                    "grid row {y} has {} cells, {graph} needs {}",
                    row.chars().count(),
                    graph.width()
                )));
            }
            for (x, c) in row.chars().enumerate() {
                match c {
                    '#' => {
                        set.insert(Vertex::new(x, y))?;
                    }
                    '.' => {}
                    other => {
                        return Err(Error::input(format!("unexpected grid character {other:?}")))
                    }
                }
            }
        }
        Ok(set)
    }

    /// Compact `{(x, y), ...}` listing.
    pub fn describe(&self) -> String {
        let mut s = String::from("{");
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            let _ = write!(s, "{v}");
        }
        s.push('}');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(desc: &str) -> ProductGraph {
        desc.parse().unwrap()
    }

    #[test]
    fn insert_remove_len() {
        let mut m = VertexSet::new(g("C5xC7"));
        assert!(m.insert(Vertex::new(4, 6)).unwrap());
        assert!(!m.insert(Vertex::new(4, 6)).unwrap());
        assert!(m.insert(Vertex::new(0, 0)).unwrap());
        assert_eq!(m.len(), 2);
        assert!(m.insert(Vertex::new(5, 0)).is_err());
        assert!(m.remove(Vertex::new(4, 6)));
        assert!(!m.remove(Vertex::new(4, 6)));
        assert_eq!(m.to_vec(), vec![Vertex::new(0, 0)]);
    }

    #[test]
    fn iteration_is_sorted() {
        let verts = [(3, 1), (0, 2), (3, 0), (1, 9)];
        let m = VertexSet::from_vertices(g("P4xC10"), verts).unwrap();
        let got = m.to_vec();
        let mut want: Vec<Vertex> = verts.iter().map(|&p| p.into()).collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn json_format() {
        let m = VertexSet::from_vertices(g("C3xC3"), [(2, 1), (0, 0)]).unwrap();
        assert_eq!(m.to_json(), r#"{"graph":"C3xC3","set":[[0,0],[2,1]]}"#);
        assert_eq!(VertexSet::from_json(&m.to_json()).unwrap(), m);
    }

    #[test]
    fn json_rejects_bad_input() {
        assert!(VertexSet::from_json(r#"{"graph":"C3xC3","set":[[0,0],[0,0]]}"#).is_err());
        assert!(VertexSet::from_json(r#"{"graph":"C3xC3","set":[[3,0]]}"#).is_err());
        assert!(VertexSet::from_json(r#"{"graph":"Z3xC3","set":[]}"#).is_err());
        assert!(VertexSet::from_json("not json").is_err());
    }

    #[test]
    fn grid_layout() {
        let m = VertexSet::from_vertices(g("P3xC4"), [(0, 0), (2, 1), (1, 3)]).unwrap();
        assert_eq!(m.to_grid(), "#..\n..#\n...\n.#.\n");
        assert_eq!(VertexSet::from_grid(g("P3xC4"), &m.to_grid()).unwrap(), m);
        assert!(VertexSet::from_grid(g("P3xC5"), &m.to_grid()).is_err());
        assert!(VertexSet::from_grid(g("P3xC4"), "#..\n..x\n...\n.#.\n").is_err());
    }

    #[test]
    fn transpose_swaps_coordinates() {
        let m = VertexSet::from_vertices(g("P2xC5"), [(1, 4)]).unwrap();
        let t = m.transpose();
        assert_eq!(t.graph().to_string(), "C5xP2");
        assert_eq!(t.to_vec(), vec![Vertex::new(4, 1)]);
    }
}
