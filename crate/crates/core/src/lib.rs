//! Linear m-uniform hypergraphs and their adjacency spectra.
//!
//! The adjacency matrix is A_ij = 1/(m−1) when i ≠ j share an edge. Exact
//! work is done on the integer matrix (m−1)·A; floating point is confined to
//! the eigensolvers.

pub mod charpoly;
pub mod closed_forms;
pub mod cycles;
pub mod error;
pub mod families;
pub mod graph;
pub mod hypergraph;
pub mod partition;
pub mod spectral;
pub mod transform;

pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use hypergraph::Hypergraph;
