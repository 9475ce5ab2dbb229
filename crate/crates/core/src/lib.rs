//! Super graphs on finite groups.
//!
//! Builds the power, enhanced power and commuting graphs of a finite group
//! together with their conjugacy and order super graphs, extracts dominant
//! vertices and reduced graphs, and analyses the reduced order super commuting
//! graphs of symmetric and alternating groups through their element-order
//! spectrum.

pub mod analytics;
pub mod arith;
pub mod catalog;
pub mod error;
pub mod graph;
pub mod group;
pub mod partition;
pub mod perm;
pub mod scan;
pub mod spectrum;
pub mod supergraph;
pub mod witness;

pub use error::{Error, Result};
pub use graph::{BitSet, DenseGraph};
pub use group::{GroupTable, Element};
pub use partition::Partition;
pub use perm::Perm;
pub use supergraph::{BaseGraph, GraphKind, Relation};
