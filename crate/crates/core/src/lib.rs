//! Maximum 0-1 timed matching on temporal graphs.
//!
//! A temporal graph assigns each edge a sorted list of half-open time
//! intervals. Two edges overlap when they share an endpoint and exist at a
//! common timestep; a 0-1 timed matching is a set of pairwise non-overlapping
//! edges. This crate provides
//!
//! - [`model`]: validated temporal graphs, the overlap relation, structure
//!   queries,
//! - [`matching`]: verification plus the interval-scheduling primitives,
//! - [`tree_dp`]: the exact polynomial solver for single-interval trees,
//! - [`greedy`]: the minimum-overlap greedy and its instance statistics,
//! - [`oracle`]: an exact branch-and-bound solver for small instances,
//! - [`reductions`]: hardness gadgets with solution extraction.
//!
//! The crate is `no_std` and needs only `alloc`.
#![no_std]

extern crate alloc;

pub mod greedy;
pub mod matching;
pub mod model;
pub mod oracle;
pub mod ratio;
pub mod reductions;
pub mod tree_dp;

pub use greedy::{solve_greedy, stats, GreedyTrace, InstanceStats};
pub use matching::{is_maximal, is_timed_matching, MatchingCheck, Maximality, TimedMatching};
pub use model::{
    overlaps, Classification, EdgeId, GraphSpec, IntervalMode, NodeId, RootedTreeView, StaticGraph,
    TemporalEdge, TemporalGraph, TimeInterval,
};
pub use oracle::{solve_exact, ConflictGraph};
pub use ratio::Ratio;
pub use tree_dp::{solve_tree, TreeDpError};
