//! Geodetic (shortest-path) convexity on undirected graphs.
//!
//! The crate covers four layers:
//!
//! * [`graph`]: immutable simple graphs, vertex sets, BFS distances and the
//!   plain-text graph format.
//! * [`convexity`]: intervals, hulls, convex/concave/hull-set predicates and
//!   binary geodesic dependencies.
//! * [`chordal`]: simplicial vertices, perfect elimination orderings and
//!   chordality testing by maximum-cardinality search.
//! * [`solver`]: the exact hull number, with a brute-force oracle.
//!
//! On top of those, [`reduction`] builds the chordal gadget graph for a
//! restricted SAT instance (each variable occurs positively in two clauses
//! and negatively in one) and checks, instance by instance, that the
//! instance is satisfiable exactly when the hull number is at most `4n`.
//!
//! Data-parallel loops run on rayon when the `parallel` feature is enabled
//! (the default). Every result is identical to the sequential one.

pub mod chordal;
pub mod convexity;
mod error;
pub mod fixtures;
pub mod graph;
pub mod par;
pub mod reduction;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph, Vertex, VertexSet};
pub use par::Execution;
