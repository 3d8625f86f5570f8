//! Exact mutual-visibility, outer/total mutual-visibility and general
//! position numbers for small graphs, with the double-graph and Mycielskian
//! operators and closed-form values for the families built from them.

pub mod error;
pub mod families;
pub mod graph;
pub mod harness;
pub mod solver;
pub mod visibility;
pub mod witnesses;

pub use error::{Error, Result};
pub use graph::{Graph, Role, VertexSet};
pub use visibility::PropertyKind;
