//! Linearizability of quadratic minimum spanning tree (QMSTP) costs.
//!
//! A quadratic cost matrix `Q` on the edges of a graph is *linearizable* when
//! some edge-cost vector `C` gives every spanning tree `T` the same value,
//! `C(T) = Q(T)`. This crate decides that question exactly for graphs whose
//! biconnected components are cliques, cycles or bicliques, builds explicit
//! linearizations with block certificates, recognizes rank-2 factored sum
//! matrices in linear time, and ships brute-force oracles that certify every
//! verdict on small graphs.
//!
//! All arithmetic is exact ([`Rat`] is an arbitrary-precision rational).
//! Vertices and edges are 0-based in the API; file formats and reports use
//! 1-based ids.

pub mod error;
pub mod factored;
pub mod fixtures;
pub mod generators;
pub mod graph;
pub mod linearize;
pub mod matrix;
pub mod oracle;
pub mod rat;

pub use error::{Error, Result};
pub use factored::{FactoredCost, FactoredSumCertificate};
pub use graph::{ComponentClass, ComponentDecomposition, Graph, SpanningTree};
pub use linearize::{Cost, Instance, Verdict};
pub use matrix::{CostMatrix, Matrix};
pub use rat::Rat;

/// Default bound on the number of spanning trees the brute-force paths may visit.
pub const DEFAULT_MAX_TREES: u64 = 1_000_000;
