//! Workbench for surjective graph homomorphism problems.

pub mod graph;

pub use graph::{Graph, GraphError, VertexSet};
pub mod hom;
pub mod cut;
pub mod gadgets;
pub mod dichotomy;
pub mod generate;
pub mod verify;
