//! Rainbow triangles in edge-colored graphs.
//!
//! * [`graph`]: validated edge-colored graphs, color-degree and
//!   monochromatic-degree queries.
//! * [`rainbow`]: rainbow-triangle enumeration, vertex-disjoint and
//!   edge-disjoint packings, short properly colored cycles.
//! * [`constructions`]: explicit extremal colorings, random samplers and the
//!   recognizer for the rainbow-free extremal structure.
//! * [`verifier`]: theorem registry, canonical exhaustive enumeration,
//!   hypothesis-conditioned sampling and annealing counterexample search.
//!
//! The crate is `no_std` and needs only `alloc`. Threading, timing and
//! file formats live in the companion `rainbow-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod constructions;
pub mod graph;
pub mod rainbow;
pub mod verifier;

pub use graph::{Color, ColoredGraph, DegreeProfile, GraphBuilder, GraphError, Vertex, VertexSet};
