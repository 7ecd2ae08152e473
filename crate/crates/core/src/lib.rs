//! Minimal separators in hereditary graph classes: enumeration, extremal
//! generators, induced-pattern tests and the tame/non-tame classifier for
//! families of graphs on at most four vertices.

pub mod canon;
pub mod catalog;
pub mod dichotomy;
mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod lab;
pub mod patterns;
pub mod separators;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{Girth, Graph, GraphMeta};
pub use separators::{count_minimal_separators, is_minimal_separator, minimal_separators, Method, SeparatorReport};
pub use vertex_set::VertexSet;
