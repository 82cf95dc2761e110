//! Estimate the size of large implicitly-given graphs by running a
//! randomized breadth-first growth process and applying spectral mixing
//! bounds, together with exact generators for the graph families the
//! bounds are sharpest on (LPS Ramanujan Cayley graphs, Erdős–Rényi random
//! graphs, polygon flip graphs and their symmetry quotients), an iterative
//! eigensolver for the extreme nontrivial spectrum, and a Hall–Knuth
//! tree-size estimator over an implicit reverse-search tree.
//!
//! Everything stochastic takes an explicit 64-bit seed and is
//! bit-reproducible; see [`rng`] for the fixed generator.

pub mod bounds;
mod error;
pub mod generators;
mod graph;
pub mod growth;
pub mod hallknuth;
pub mod rng;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{
    edge_count_between, load_edge_list, store_edge_list, volume, DegreeStats, Graph, VertexSet,
};
