use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::stats::{EventKind, Origin, RunStats, SearchEvent, TraceSink};
use crate::error::{Error, Result};
use crate::network::{Network, VertexId};
use crate::sites::{PairRule, SiteId, SiteSet};
use crate::weight::Distance;

/// How many distinct sites may settle each vertex (per color class when the
/// search separates classes).
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Budget {
    /// At most `B + 1` sites.
    Limited(usize),
    Unlimited,
}

impl Budget {
    fn capacity(self, class_size: usize) -> usize {
        match self {
            Budget::Limited(b) => b.saturating_add(1).min(class_size),
            Budget::Unlimited => class_size,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Continue,
    Stop,
}

/// Settle-time pruning hook for [`interleaved_multisource`].
///
/// Called when `site`'s search is about to settle `vertex` at `dist`, with the
/// sites that already settled there. `Stop` discards the entry: it is not
/// recorded and the search does not expand through it.
pub trait PruneRule {
    fn on_settle(
        &mut self,
        site: SiteId,
        vertex: VertexId,
        dist: Distance,
        settled: &[(SiteId, Distance)],
    ) -> Decision;
}

impl<F> PruneRule for F
where
    F: FnMut(SiteId, VertexId, Distance, &[(SiteId, Distance)]) -> Decision,
{
    fn on_settle(
        &mut self,
        site: SiteId,
        vertex: VertexId,
        dist: Distance,
        settled: &[(SiteId, Distance)],
    ) -> Decision {
        self(site, vertex, dist, settled)
    }
}

/// Sites that settled a vertex, sorted by `(distance, site number)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VisitList {
    entries: Vec<(SiteId, Distance)>,
}

impl VisitList {
    pub fn entries(&self) -> &[(SiteId, Distance)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, s: SiteId) -> Option<Distance> {
        self.entries.iter().find(|e| e.0 == s).map(|e| e.1)
    }

    pub(crate) fn into_entries(self) -> Vec<(SiteId, Distance)> {
        self.entries
    }
}

#[derive(Default)]
pub struct SearchOptions<'a> {
    /// Budget classes: `AnyTwo` shares one budget among all sites,
    /// `CrossColor` gives S and T sites separate budgets.
    pub classes: Option<PairRule>,
    pub trace: Option<TraceSink<'a>>,
}

#[derive(Clone, Debug)]
pub struct MultiSourceRun {
    pub lists: Vec<VisitList>,
    pub stats: RunStats,
}

/// One logical Dijkstra per site, interleaved through a shared queue keyed
/// by `(distance, site, vertex)`.
///
/// A search does not expand through a vertex already settled by its class's
/// budget of other sites, nor through one where `rule` answered `Stop`.
pub fn interleaved_multisource(
    net: &Network,
    sites: &SiteSet,
    budget: Budget,
    mut rule: Option<&mut dyn PruneRule>,
    opts: SearchOptions<'_>,
) -> Result<MultiSourceRun> {
    if sites.is_empty() {
        return Err(Error::domain("at least one site required"));
    }
    let classes = opts.classes.unwrap_or(PairRule::AnyTwo);
    let mut trace = opts.trace;
    let n = net.vertex_count();
    let class_of: Vec<u8> = sites
        .ids()
        .map(|s| classes.class_of(sites, s) as u8)
        .collect();
    let mut class_sizes = [0usize; 2];
    for &c in &class_of {
        class_sizes[c as usize] += 1;
    }
    let caps = [
        budget.capacity(class_sizes[0]),
        budget.capacity(class_sizes[1]),
    ];

    let mut lists: Vec<Vec<(SiteId, Distance)>> = vec![Vec::new(); n];
    let mut filled: Vec<[u32; 2]> = vec![[0, 0]; n];
    // Sites stopped by the prune rule at each vertex; kept apart from
    // `lists` so stale queue entries for them are skipped.
    let mut blocked: Vec<Vec<SiteId>> = vec![Vec::new(); n];
    let mut stats = RunStats::with_vertices(n);

    let emit = |trace: &mut Option<TraceSink<'_>>, kind, vertex, s, distance| {
        if let Some(t) = trace.as_mut() {
            t(&SearchEvent {
                kind,
                vertex,
                origin: Origin::Site(s),
                distance,
            });
        }
    };

    let mut heap = BinaryHeap::new();
    for s in sites.ids() {
        heap.push(Reverse((Distance::ZERO, s, sites.vertex(s))));
    }
    while let Some(Reverse((d, s, v))) = heap.pop() {
        if lists[v].iter().any(|e| e.0 == s) || blocked[v].contains(&s) {
            continue;
        }
        let class = class_of[s.index()] as usize;
        if filled[v][class] as usize >= caps[class] {
            stats.budget_rejections += 1;
            emit(&mut trace, EventKind::Prune, v, s, d);
            continue;
        }
        if let Some(r) = rule.as_deref_mut() {
            if r.on_settle(s, v, d, &lists[v]) == Decision::Stop {
                blocked[v].push(s);
                stats.prunes += 1;
                emit(&mut trace, EventKind::Prune, v, s, d);
                continue;
            }
        }
        lists[v].push((s, d));
        filled[v][class] += 1;
        stats.vertex_visits += 1;
        stats.visits_per_vertex[v] += 1;
        emit(&mut trace, EventKind::Settle, v, s, d);

        for (u, w) in net.neighbors(v) {
            stats.edge_relaxations += 1;
            let nd = d + w;
            emit(&mut trace, EventKind::Relax, u, s, nd);
            if filled[u][class] as usize >= caps[class]
                || lists[u].iter().any(|e| e.0 == s)
                || blocked[u].contains(&s)
            {
                continue;
            }
            heap.push(Reverse((nd, s, u)));
        }
    }

    Ok(MultiSourceRun {
        lists: lists
            .into_iter()
            .map(|entries| VisitList { entries })
            .collect(),
        stats,
    })
}
