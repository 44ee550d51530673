use thiserror::Error;

use crate::grid::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid factor: {0}")]
    InvalidFactor(String),

    #[error("invalid graph descriptor {0:?} (expected e.g. P5xC7, C15xC15)")]
    InvalidDescriptor(String),

    #[error("coordinate {coord} out of range for factor of order {order}")]
    CoordOutOfRange { coord: usize, order: usize },

    #[error("vertex {vertex} out of range for {graph}")]
    VertexOutOfRange { vertex: Vertex, graph: String },

    #[error("visibility is only defined for distinct vertices, got {0} twice")]
    SameVertex(Vertex),

    #[error("duplicate vertex {0} in set")]
    DuplicateVertex(Vertex),

    #[error("graph mismatch: expected {expected}, found {found}")]
    GraphMismatch { expected: String, found: String },

    #[error("path enumeration refused: distance {dist} exceeds cap {cap}")]
    PathCapExceeded { dist: usize, cap: usize },

    #[error("{what} is not supported for t = {t} (needs {requirement}); try `mutvis mu`")]
    UnsupportedSize {
        what: &'static str,
        t: usize,
        requirement: String,
    },

    #[error("graph has {vertices} vertices, above the exhaustive-search cap of {cap}")]
    VertexCapExceeded { vertices: usize, cap: usize },

    #[error("{0}")]
    InvalidInput(String),

    #[error("malformed set file: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
