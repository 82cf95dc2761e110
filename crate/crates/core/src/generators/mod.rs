//! Exact constructions of the graph families used throughout the crate:
//! LPS Ramanujan Cayley graphs, Erdős–Rényi random graphs in both classical
//! models, polygon flip graphs, and their cyclic/dihedral quotients.
//!
//! All generators are pure functions of (parameters, seed); every stochastic
//! one takes an explicit seed and is bit-reproducible (see [`crate::rng`]).

mod er;
mod lps;
pub(crate) mod polygon;
pub mod small;

pub use er::{erdos_renyi_gnm, erdos_renyi_gnp};
pub use lps::lps_graph;
pub use polygon::{
    polygon_flip_graph, polygon_flip_quotient, triangulation_count, PolygonFlipGraph,
    QuotientGroup, Triangulation,
};
