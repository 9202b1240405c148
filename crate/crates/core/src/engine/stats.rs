use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::network::VertexId;
use crate::sites::SiteId;
use crate::weight::Distance;

/// Instrumentation counters for one run (or one phase of a run).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RunStats {
    /// Settle events: a (search origin, vertex) entry accepted with its final distance.
    pub vertex_visits: u64,
    /// Directed edge scans out of settled entries.
    pub edge_relaxations: u64,
    /// Entries discarded by a prune rule.
    pub prunes: u64,
    /// Entries discarded because the vertex's visit budget was full.
    pub budget_rejections: u64,
    /// Vertices that needed their own bounded search (revised algorithm, step 2).
    pub case_ii_count: u64,
    /// Admissible site pairs whose round-trip value was examined at some vertex.
    pub pairs_evaluated: u64,
    /// Sites whose search found no admissible partner (candidate-table building).
    pub sites_without_partner: u64,
    #[serde(skip)]
    pub visits_per_vertex: Vec<u32>,
}

impl RunStats {
    pub(crate) fn with_vertices(n: usize) -> Self {
        RunStats {
            visits_per_vertex: vec![0; n],
            ..Default::default()
        }
    }

    pub fn merge(&mut self, other: &RunStats) {
        self.vertex_visits += other.vertex_visits;
        self.edge_relaxations += other.edge_relaxations;
        self.prunes += other.prunes;
        self.budget_rejections += other.budget_rejections;
        self.case_ii_count += other.case_ii_count;
        self.pairs_evaluated += other.pairs_evaluated;
        self.sites_without_partner += other.sites_without_partner;
        if self.visits_per_vertex.is_empty() {
            self.visits_per_vertex = other.visits_per_vertex.clone();
        } else if other.visits_per_vertex.len() == self.visits_per_vertex.len() {
            for (a, b) in self
                .visits_per_vertex
                .iter_mut()
                .zip(&other.visits_per_vertex)
            {
                *a += b;
            }
        }
    }

    /// Map from visit count to number of vertices visited that many times.
    pub fn visit_histogram(&self) -> BTreeMap<u32, usize> {
        let mut hist = BTreeMap::new();
        for &c in &self.visits_per_vertex {
            *hist.entry(c).or_insert(0) += 1;
        }
        hist
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum EventKind {
    Settle,
    Relax,
    Prune,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    Site(SiteId),
    Apex,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct SearchEvent {
    pub kind: EventKind,
    pub vertex: VertexId,
    pub origin: Origin,
    pub distance: Distance,
}

impl fmt::Display for SearchEvent {
    /// One TSV record: `kind vertex origin distance`, vertex 1-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            EventKind::Settle => "SETTLE",
            EventKind::Relax => "RELAX",
            EventKind::Prune => "PRUNE",
        };
        write!(f, "{kind}\t{}\t", self.vertex + 1)?;
        match self.origin {
            Origin::Site(s) => write!(f, "{s}")?,
            Origin::Apex => f.write_str("APEX")?,
        }
        write!(f, "\t{}", self.distance)
    }
}

pub type TraceSink<'a> = &'a mut dyn FnMut(&SearchEvent);
