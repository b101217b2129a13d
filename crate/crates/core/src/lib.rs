//! Exact computation and verification of the neighbor-locating chromatic
//! number of finite simple graphs.
//!
//! A proper coloring is *neighbor-locating* (NL) when any two vertices that
//! share a color see different sets of colors in their neighborhoods. The
//! minimum number of colors over all NL-colorings of a graph `G` is its
//! neighbor-locating chromatic number, written `chi_NL(G)` here.
//!
//! The crate is organized as follows:
//!
//! * [`graph`] — immutable bit-row graphs, standard families, graph
//!   operators (join, disjoint union, Mycielski, Cartesian product) and
//!   structural metrics.
//! * [`graph6`] — the compact ASCII interchange format used for corpora.
//! * [`coloring`] — color partitions, nr-tuples, and the NL / ML /
//!   dominating verifiers.
//! * [`solver`] — exact `chi_NL` by branch-and-bound with certificates,
//!   plus brute-force oracles for `chi`, `chi_L`, `lambda` at desk scale.
//! * [`families`] — closed forms and coloring composers for structured
//!   graphs: the extremal `G_k` construction, split graphs, joins and
//!   disjoint unions, Mycielski and Cartesian-product colorings, and the
//!   recognizers for graphs with `chi_NL` equal to `n` or `n - 1`.
//! * [`harness`] — an exhaustive small-graph census that re-checks every
//!   structural result against the exact solver and reports violations.

pub mod coloring;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod solver;

pub use coloring::{Coloring, ColoringError, DistanceVector, NrTuple, Verdict};
pub use graph::{Diameter, FamilyError, FamilySpec, Graph, GraphError, GraphMetrics, TwinKind};
pub use graph6::{from_graph6, to_graph6, Graph6Error};
pub use solver::{
    chi_nl, chi_nl_exact, Budget, Certificate, SolveOptions, SolveOutcome, SolveResult,
};
