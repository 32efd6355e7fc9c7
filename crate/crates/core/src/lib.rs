//! Distance spectral radius, k-matchings and exhaustive verification on
//! small connected graphs.

pub mod cli;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod matching;
pub mod quotient;
pub mod spectra;

pub use error::{Error, Graph6Error, Result};
pub use graph::{Graph, VertexSet};
