//! Spanning path-cycle systems with prescribed end-vertices.
//!
//! Given a graph `G` and an even set `W` of terminals, a spanning path-cycle
//! system is a family of vertex-disjoint paths and cycles covering `V(G)` whose
//! paths have exactly the terminals as their ends. This crate decides and
//! constructs such systems through f-factors, produces Tutte certificates
//! when none exists, checks the structural hypotheses used by the regular-graph
//! existence theorem, replays its discharging argument in exact arithmetic,
//! and generates the extremal families showing its hypotheses are sharp.

pub mod graph;
pub mod matching;
pub mod named;
pub mod factor;
pub mod tutte;
pub mod verify;
pub mod discharge;
pub mod families;
pub mod corpus;

pub use graph::{Graph, GraphError, Vertex, VertexSet};
