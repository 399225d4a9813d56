//! Uniquely 2-colourable 4-cycle decompositions of complete graphs, cocktail
//! party graphs and complete multipartite graphs, with an exhaustive
//! not-all-equal colouring verifier.

pub mod assembly;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod host;
pub mod labels;
pub mod seeds;
pub mod verify;

pub use error::{Error, Result};
pub use host::{Cycle4, Decomposition, HostGraph, Vertex};
pub use verify::{Colouring, Verdict};
