//! Shortest-path machinery shared by every diagram algorithm.
//!
//! [`sssp`] is plain Dijkstra with an optional stop radius, [`apex_sssp`]
//! grows all single-site regions at once, and [`interleaved_multisource`]
//! runs one logical Dijkstra per site through a single queue keyed by
//! `(distance, site, vertex)` with per-vertex visit budgets and pluggable
//! settle-time pruning.

mod multi;
mod single;
mod stats;

pub use multi::{
    interleaved_multisource, Budget, Decision, MultiSourceRun, PruneRule, SearchOptions, VisitList,
};
pub use single::{apex_sssp, pairwise_site_distance, sssp, ApexLabels, Flow, SingleSource};
pub use stats::{EventKind, Origin, RunStats, SearchEvent, TraceSink};
