//! Algorithms for vertex-oblique graphs.
//!
//! A vertex of degree `r` whose neighbours have degrees `x1 >= ... >= xr` has
//! *vertex type* `(x1, ..., xr)`. A graph is *vertex-oblique* when all its
//! vertex types are pairwise distinct, and *dually vertex-oblique* when in
//! addition its multiset of types coincides with that of its complement.
//!
//! This crate provides:
//!
//! * labeled simple graphs and bipartite graphs backed by per-vertex bitsets
//!   ([`graph`], [`bipartite`]),
//! * vertex types, the total order on them, and type sequences ([`types`]),
//! * obliqueness predicates and the degree-class audit ([`analysis`]),
//! * constructions of dually vertex-oblique graphs for every feasible order
//!   ([`constructions`]),
//! * the switching calculus: restricted switches, companion graphs and
//!   switch paths between graphs with equal type sequences ([`switching`]),
//! * degree- and type-sequence recognition and realization ([`sequences`]),
//! * exhaustive searches and small structural probes ([`search`]).
//!
//! ```
//! use oblique_core::analysis::is_dually_vertex_oblique;
//! use oblique_core::constructions::construct;
//!
//! let g = construct(12, false).unwrap();
//! assert!(is_dually_vertex_oblique(&g));
//! ```

pub mod analysis;
pub mod bipartite;
pub mod constructions;
pub mod graph;
pub mod io;
pub mod search;
pub mod sequences;
pub mod switching;
pub mod types;

pub use bipartite::BipartiteGraph;
pub use graph::Graph;
pub use types::{DegreeSequence, TypeSequence, VertexType};
