//! Graph-spec parsing, the reproduction suite and its report.

pub mod corpus;
pub mod report;
pub mod suite;

use crate::error::Result;
use crate::families::GraphSpec;
use crate::graph::Graph;

pub use report::{Check, Expected, Report, Status, Summary};
pub use suite::{run_verification_suite, Scope, SuiteConfig};

/// Builds the graph described by a families-grammar string such as
/// `double(cycle:7)` or `myc(kbip:3,4)`.
pub fn parse_graph_spec(text: &str) -> Result<Graph> {
    GraphSpec::parse(text)?.build()
}
