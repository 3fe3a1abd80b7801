//! Spanning trees that may share a bounded number of inner vertices and edges.
//!
//! A family of `k` spanning trees is *(i,j)-disjoint* when at most `i` vertices
//! are inner in two or more trees and at most `j` edges lie in two or more
//! trees. The crate provides generators for the graph classes where such
//! families are understood, explicit constructions, verifiers that return full
//! counterexamples, closed-form bounds, exhaustive oracles for small graphs and
//! a gadget reduction with its tree lifting.

pub mod bounds;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod reduction;
pub mod trees;

pub use error::{Error, Result};
pub use graph::{Edge, Graph};
pub use trees::{SpanningTree, TreeFamily, VertexPartition};
