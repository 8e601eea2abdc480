//! Equitable tree-colorings of interval graphs.
//!
//! An equitable tree-k-coloring splits the vertices into `k` classes that
//! each induce a forest and whose sizes differ by at most one. This crate
//! provides:
//!
//! * [`graph`]: interval models, the induced graph, umbrella orders, clique
//!   sweeps and forest/star checks;
//! * [`coloring`]: the verifier, the round-robin coloring along the interval
//!   order (valid for every `k >= ceil((Δ+1)/2)`), a linear-time decision
//!   procedure for proper interval graphs, and an exact exhaustive solver;
//! * [`gadgets`]: bin-packing instances, an exact packer, and the split and
//!   interval gadgets that encode packings as colorings (and back);
//! * [`batch`]: data-parallel evaluation over many instances;
//! * [`io`] and [`cli`]: the text file formats and the `eqtree` command line.
//!
//! The `parallel` feature (on by default) runs batch evaluation and the top
//! levels of the exact search on rayon; without it the same code runs
//! sequentially with identical results.

pub mod batch;
pub mod cli;
pub mod coloring;
mod dsu;
pub mod error;
pub mod gadgets;
pub mod graph;
pub mod io;

pub use coloring::{
    decide_proper_interval, exact_solve, round_robin_color, verify_equitable_tree_coloring, Coloring,
    Failure, FailureKind, Verdict,
};
pub use error::{Error, Result};
pub use graph::{derive_graph, interval_order, max_clique_sweep, Graph, Interval, IntervalRep, VertexOrder};
