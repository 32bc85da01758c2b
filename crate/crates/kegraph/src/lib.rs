//! Exact analysis of matching and independence structure in small graphs:
//! independence and matching numbers, critical independent sets and their
//! kernel, core, criticality of vertices and edges, and the counts of
//! vertices/edges whose deletion preserves the König-Egerváry property
//! (alpha + mu = n). Everything is exact and budgeted; nothing falls back to
//! heuristics.
//!
//! Start with [`graph::Graph`], the generators in [`generators`], or the
//! runnable programs under `examples/`.

pub mod analysis;
pub mod census;
pub mod cli;
pub mod critical;
pub mod format;
pub mod gallery;
pub mod generators;
pub mod graph;
pub mod independence;
pub mod matching;
pub mod theorems;

pub use analysis::{ke_class, ke_report, KeClassification, KeKind, KeReport};
pub use graph::{EdgeSet, Graph, GraphError, VertexSet};
pub use independence::{Budget, EngineError};
