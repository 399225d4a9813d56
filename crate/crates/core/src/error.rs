use thiserror::Error;

use crate::host::Vertex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ell must be a positive integer")]
    ZeroEll,

    #[error("label ({i},{j},{c}) is out of range for ell = {ell}")]
    LabelOutOfRange { i: usize, j: u8, c: u8, ell: usize },

    #[error("part colouring has length {0}, expected a positive multiple of 4")]
    PartLength(usize),

    #[error("colour value {0} is not 0 or 1")]
    ColourValue(u8),

    #[error("invalid host graph: {0}")]
    InvalidHost(String),

    #[error("vertex {vertex} is out of range for a host with {count} vertices")]
    VertexOutOfRange { vertex: Vertex, count: usize },

    #[error("edge endpoints must differ (got {0} twice)")]
    SelfLoop(Vertex),

    #[error("cycle repeats vertex {0}")]
    RepeatedVertex(Vertex),

    #[error("vertex embedding is not injective: {0} is hit twice")]
    NonInjectiveEmbed(Vertex),

    #[error("the gamma decomposition needs ell > 1 on side 0 (got {0})")]
    GammaNeedsLargerEll(usize),

    #[error("sides have unequal sizes {0} and {1}")]
    UnequalSides(usize, usize),

    #[error("block layout mismatch: {0}")]
    BlockMismatch(String),

    #[error("cycle {0:?} was produced twice")]
    DuplicateCycle([Vertex; 4]),

    #[error("inadmissible parameters: {0}")]
    Inadmissible(String),

    #[error("vertex sets are not disjoint: {0} appears in both")]
    Overlap(Vertex),

    #[error("host is not complete multipartite")]
    NotMultipartite,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
