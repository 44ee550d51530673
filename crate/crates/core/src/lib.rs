//! Mutual-visibility sets in Cartesian products of paths and cycles.
//!
//! A set `M` of vertices is a mutual-visibility set when every two members
//! are joined by a shortest path with no other member on it. This crate
//! verifies such sets, builds the known large families on cylinders
//! `P_s □ C_t` and tori `C_s □ C_t`, and computes the largest size `μ` exactly
//! on small graphs.

pub mod constructions;
mod error;
mod grid;
mod set;
pub mod solver;
mod visibility;

pub use error::{Error, Result};
pub use grid::{
    circ_dist, circ_interval, lin_interval, CoordInterval, Factor, FactorKind, ProductGraph,
    Vertex, MAX_ORDER,
};
pub use set::VertexSet;
pub use solver::{mu_exact, mu_lower_bound, upper_bound, BoundUsed, SolveOptions, SolveReport};
pub use visibility::{
    brute_force_paths, brute_force_paths_capped, is_mutual_visibility_set, is_visible,
    VisibilityReport, DEFAULT_PATH_CAP,
};
