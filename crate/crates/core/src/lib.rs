//! Graph sharing game where the taken part stays connected.
//!
//! Exact rational weights throughout. The crate contains a memoized minimax
//! solver for small graphs, the structural decomposition of weighted graphs
//! (separators, cycle-reduction sets, clique subdivisions), and Alice's
//! strategies with per-instance certified lower bounds.

pub mod audit;
pub mod decompose;
pub mod error;
pub mod game;
pub mod generate;
pub mod graph;
pub mod select;
pub mod strategist;
pub mod vset;
pub mod weight;

pub type VertexId = usize;

pub use error::{Error, Result};
pub use graph::{CycleCertificate, SubdivisionWitness, WeightedGraph};
pub use vset::VertexSet;
pub use weight::Weight;
