//! Canonical tree-decompositions along thin vertex cuts.
//!
//! The pipeline: find the connectivity level `κ` at which a graph has two or
//! more maximal `κ`-inseparable vertex sets, enumerate the `κ`-cuts that
//! separate them, keep a canonical nested subsystem, and arrange it as a
//! bipartite structure tree of separators and blocks.

pub mod cuts;
pub mod decompose;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod inseparable;
pub mod lemmas;
pub mod nesting;
pub mod oracle;
mod par;
pub mod pipeline;
pub mod tree;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use par::is_parallel;
pub use pipeline::{analyze, analyze_with, Analysis};
