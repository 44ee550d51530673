//! Coordinates, distances and geodesic intervals in products of paths and cycles.
//!
//! A [`ProductGraph`] is `X_s □ Y_t` where each factor is a path `P_n` on
//! `0..n` or a cycle `C_n` on `0..n`. Vertices are `(x, y)` pairs with `x`
//! in the first factor and `y` in the second. Distances add across factors and
//! the interval `I(u, v)` is the product of the per-factor intervals.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest factor order accepted anywhere in the crate.
pub const MAX_ORDER: usize = 1 << 15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorKind {
    Path,
    Cycle,
}

impl FactorKind {
    fn letter(self) -> char {
        match self {
            FactorKind::Path => 'P',
            FactorKind::Cycle => 'C',
        }
    }
}

/// One factor of a product: a path or cycle together with its order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    kind: FactorKind,
    order: usize,
}

impl Factor {
    pub fn new(kind: FactorKind, order: usize) -> Result<Self> {
        let min = match kind {
            FactorKind::Path => 2,
            FactorKind::Cycle => 3,
        };
        if order < min || order > MAX_ORDER {
            return Err(Error::InvalidFactor(format!(
                "{}{order}: order must lie in {min}..={MAX_ORDER}",
                kind.letter()
            )));
        }
        Ok(Factor { kind, order })
    }

    pub fn path(order: usize) -> Result<Self> {
        Self::new(FactorKind::Path, order)
    }

    pub fn cycle(order: usize) -> Result<Self> {
        Self::new(FactorKind::Cycle, order)
    }

    pub fn kind(&self) -> FactorKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_cycle(&self) -> bool {
        self.kind == FactorKind::Cycle
    }

    pub fn contains(&self, c: usize) -> bool {
        c < self.order
    }

    fn check(&self, c: usize) -> Result<()> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(Error::CoordOutOfRange {
                coord: c,
                order: self.order,
            })
        }
    }

    /// Distance between two in-range coordinates.
    #[inline]
    pub fn dist(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.order && b < self.order);
        let d = a.abs_diff(b);
        match self.kind {
            FactorKind::Path => d,
            FactorKind::Cycle => d.min(self.order - d),
        }
    }

    /// Neighbours of `c` in the factor (one or two of them).
    pub fn neighbors(&self, c: usize) -> impl Iterator<Item = usize> {
        let n = self.order;
        let (lo, hi) = match self.kind {
            FactorKind::Path => (c.checked_sub(1), (c + 1 < n).then_some(c + 1)),
            FactorKind::Cycle => (Some((c + n - 1) % n), Some((c + 1) % n)),
        };
        lo.into_iter().chain(hi)
    }

    pub fn interval(&self, a: usize, b: usize) -> Result<CoordInterval> {
        self.check(a)?;
        self.check(b)?;
        Ok(match self.kind {
            FactorKind::Path => lin_interval(a, b),
            FactorKind::Cycle => geodesic_arc(a, b, self.order),
        })
    }

    /// Coordinates of `I(a, b)` layered by distance from `a`, with links to
    /// the coordinates one step closer to `a`.
    pub(crate) fn span(&self, a: usize, b: usize) -> Span {
        let total = self.dist(a, b);
        let mut coords = Vec::with_capacity(total + 2);
        let mut preds = Vec::with_capacity(total + 2);
        coords.push(a);
        preds.push([NO_PRED; 2]);
        let mut layer_start = 0;
        for step in 1..=total {
            let layer_end = coords.len();
            for idx in layer_start..layer_end {
                let c = coords[idx];
                for next in self.neighbors(c) {
                    if self.dist(a, next) != step || self.dist(next, b) != total - step {
                        continue;
                    }
                    match coords[layer_end..].iter().position(|&x| x == next) {
                        Some(off) => preds[layer_end + off][1] = idx,
                        None => {
                            coords.push(next);
                            preds.push([idx, NO_PRED]);
                        }
                    }
                }
            }
            layer_start = layer_end;
        }
        Span { coords, preds }
    }
}

pub(crate) const NO_PRED: usize = usize::MAX;

/// Geodesic interval of one factor, ordered by distance from its start.
#[derive(Debug)]
pub(crate) struct Span {
    pub coords: Vec<usize>,
    pub preds: Vec<[usize; 2]>,
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.order)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex {
    pub x: usize,
    pub y: usize,
}

impl Vertex {
    pub const fn new(x: usize, y: usize) -> Self {
        Vertex { x, y }
    }
}

impl From<(usize, usize)> for Vertex {
    fn from((x, y): (usize, usize)) -> Self {
        Vertex { x, y }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A set of coordinates of one factor, kept sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordInterval {
    members: Vec<usize>,
}

impl CoordInterval {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, c: usize) -> bool {
        self.members.binary_search(&c).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    fn from_unsorted(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        CoordInterval { members }
    }
}

/// `|n - k|_s`, the length of the shorter arc between `n` and `k` on `C_s`.
pub fn circ_dist(n: usize, k: usize, s: usize) -> Result<usize> {
    let cycle = Factor::cycle(s)?;
    cycle.check(n)?;
    cycle.check(k)?;
    Ok(cycle.dist(n, k))
}

/// All integers between `k` and `n` inclusive, in either argument order.
pub fn lin_interval(k: usize, n: usize) -> CoordInterval {
    CoordInterval {
        members: (k.min(n)..=k.max(n)).collect(),
    }
}

/// Coordinates on a shortest `k`-`n` arc of `C_s`; all of `C_s` when the two
/// positions are antipodal.
pub fn circ_interval(k: usize, n: usize, s: usize) -> Result<CoordInterval> {
    Factor::cycle(s)?.interval(k, n)
}

fn geodesic_arc(k: usize, n: usize, s: usize) -> CoordInterval {
    let d = k.abs_diff(n).min(s - k.abs_diff(n));
    if 2 * d == s {
        return CoordInterval {
            members: (0..s).collect(),
        };
    }
    let forward = (n + s - k) % s == d;
    let members = (0..=d)
        .map(|step| {
            if forward {
                (k + step) % s
            } else {
                (k + s - step) % s
            }
        })
        .collect();
    CoordInterval::from_unsorted(members)
}

/// Two-factor Cartesian product `fx □ fy`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProductGraph {
    pub fx: Factor,
    pub fy: Factor,
}

impl ProductGraph {
    pub fn new(fx: Factor, fy: Factor) -> Self {
        ProductGraph { fx, fy }
    }

    pub fn torus(s: usize, t: usize) -> Result<Self> {
        Ok(Self::new(Factor::cycle(s)?, Factor::cycle(t)?))
    }

    pub fn cylinder(s: usize, t: usize) -> Result<Self> {
        Ok(Self::new(Factor::path(s)?, Factor::cycle(t)?))
    }

    pub fn grid(s: usize, t: usize) -> Result<Self> {
        Ok(Self::new(Factor::path(s)?, Factor::path(t)?))
    }

    pub fn width(&self) -> usize {
        self.fx.order
    }

    pub fn height(&self) -> usize {
        self.fy.order
    }

    pub fn vertex_count(&self) -> usize {
        self.fx.order * self.fy.order
    }

    /// The same product with the factors swapped.
    pub fn transpose(&self) -> Self {
        ProductGraph {
            fx: self.fy,
            fy: self.fx,
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.fx.contains(v.x) && self.fy.contains(v.y)
    }

    pub fn check(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                graph: self.to_string(),
            })
        }
    }

    /// Dense index of `v`; increasing index is lexicographic `(x, y)` order.
    #[inline]
    pub fn index(&self, v: Vertex) -> usize {
        v.x * self.fy.order + v.y
    }

    #[inline]
    pub fn vertex(&self, index: usize) -> Vertex {
        Vertex::new(index / self.fy.order, index % self.fy.order)
    }

    /// All vertices in lexicographic order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        let (s, t) = (self.fx.order, self.fy.order);
        (0..s).flat_map(move |x| (0..t).map(move |y| Vertex::new(x, y)))
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let xs = self.fx.neighbors(v.x).map(move |x| Vertex::new(x, v.y));
        let ys = self.fy.neighbors(v.y).map(move |y| Vertex::new(v.x, y));
        xs.chain(ys)
    }

    #[inline]
    pub(crate) fn dist_unchecked(&self, u: Vertex, v: Vertex) -> usize {
        self.fx.dist(u.x, v.x) + self.fy.dist(u.y, v.y)
    }

    pub fn dist(&self, u: Vertex, v: Vertex) -> Result<usize> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.dist_unchecked(u, v))
    }

    /// `I(u, v)` in lexicographic order.
    pub fn interval(&self, u: Vertex, v: Vertex) -> Result<Vec<Vertex>> {
        self.check(u)?;
        self.check(v)?;
        let xs = self.fx.interval(u.x, v.x)?;
        let ys = self.fy.interval(u.y, v.y)?;
        Ok(xs
            .iter()
            .flat_map(|x| ys.iter().map(move |y| Vertex::new(x, y)))
            .collect())
    }
}

impl fmt::Display for ProductGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.fx, self.fy)
    }
}

impl FromStr for ProductGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidDescriptor(s.to_string());
        let lower = s.trim().to_ascii_lowercase();
        let (left, right) = lower.split_once('x').ok_or_else(bad)?;
        let factor = |part: &str| -> Result<Factor> {
            let kind = match part.chars().next() {
                Some('p') => FactorKind::Path,
                Some('c') => FactorKind::Cycle,
                _ => return Err(bad()),
            };
            let digits = &part[1..];
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let order = digits.parse().map_err(|_| bad())?;
            Factor::new(kind, order)
        };
        Ok(ProductGraph::new(factor(left)?, factor(right)?))
    }
}

impl Serialize for ProductGraph {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ProductGraph {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
