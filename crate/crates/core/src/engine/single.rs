use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::stats::{EventKind, Origin, RunStats, SearchEvent, TraceSink};
use crate::error::{Error, Result};
use crate::network::{Network, VertexId};
use crate::sites::{SiteId, SiteSet};
use crate::weight::Distance;

/// What a settle callback wants the search to do next.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Flow {
    Continue,
    /// Stop the whole search; the vertex being offered is not settled.
    Halt,
}

/// Reusable single-source Dijkstra state.
///
/// Resetting only touches vertices reached by the previous run, so many
/// small radius-bounded searches on a large network stay cheap.
#[derive(Clone, Debug)]
pub struct SingleSource {
    dist: Vec<Distance>,
    settled: Vec<bool>,
    touched: Vec<VertexId>,
    order: Vec<VertexId>,
    heap: BinaryHeap<Reverse<(Distance, VertexId)>>,
}

impl SingleSource {
    pub fn new(n: usize) -> Self {
        SingleSource {
            dist: vec![Distance::UNREACHABLE; n],
            settled: vec![false; n],
            touched: Vec::new(),
            order: Vec::new(),
            heap: BinaryHeap::new(),
        }
    }

    fn reset(&mut self) {
        for &v in &self.touched {
            self.dist[v] = Distance::UNREACHABLE;
            self.settled[v] = false;
        }
        self.touched.clear();
        self.order.clear();
        self.heap.clear();
    }

    /// Runs Dijkstra from `source`. `on_settle` sees every vertex in
    /// non-decreasing distance order (ties by vertex id) before it is
    /// settled and may halt the search.
    pub fn run(
        &mut self,
        net: &Network,
        source: VertexId,
        stats: &mut RunStats,
        mut on_settle: impl FnMut(VertexId, Distance) -> Flow,
    ) {
        self.reset();
        self.dist[source] = Distance::ZERO;
        self.touched.push(source);
        self.heap.push(Reverse((Distance::ZERO, source)));
        while let Some(Reverse((d, v))) = self.heap.pop() {
            if self.settled[v] || d > self.dist[v] {
                continue;
            }
            if on_settle(v, d) == Flow::Halt {
                break;
            }
            self.settled[v] = true;
            self.order.push(v);
            stats.vertex_visits += 1;
            if let Some(c) = stats.visits_per_vertex.get_mut(v) {
                *c += 1;
            }
            for (u, w) in net.neighbors(v) {
                stats.edge_relaxations += 1;
                let nd = d + w;
                if nd < self.dist[u] {
                    if !self.dist[u].is_finite() {
                        self.touched.push(u);
                    }
                    self.dist[u] = nd;
                    self.heap.push(Reverse((nd, u)));
                }
            }
        }
    }

    /// Final distance of `v` from the last run's source, `UNREACHABLE` if it
    /// was not settled.
    pub fn distance(&self, v: VertexId) -> Distance {
        if self.settled[v] {
            self.dist[v]
        } else {
            Distance::UNREACHABLE
        }
    }

    /// Vertices settled by the last run, in settle order.
    pub fn settled_order(&self) -> &[VertexId] {
        &self.order
    }
}

/// Distances from `source` to every vertex. With `stop_radius`, vertices
/// farther than the radius (and unreachable ones) map to `UNREACHABLE`.
pub fn sssp(net: &Network, source: VertexId, stop_radius: Option<Distance>) -> Vec<Distance> {
    let mut search = SingleSource::new(net.vertex_count());
    let radius = stop_radius.unwrap_or(Distance::UNREACHABLE);
    search.run(net, source, &mut RunStats::default(), |_, d| {
        if d > radius {
            Flow::Halt
        } else {
            Flow::Continue
        }
    });
    (0..net.vertex_count())
        .map(|v| search.distance(v))
        .collect()
}

/// Exact network distance between two sites.
pub fn pairwise_site_distance(net: &Network, sites: &SiteSet, a: SiteId, b: SiteId) -> Distance {
    if a == b {
        return Distance::ZERO;
    }
    let target = sites.vertex(b);
    let mut search = SingleSource::new(net.vertex_count());
    let mut reached = false;
    search.run(net, sites.vertex(a), &mut RunStats::default(), |v, _| {
        if reached {
            return Flow::Halt;
        }
        reached = v == target;
        Flow::Continue
    });
    search.distance(target)
}

/// Nearest site (under `(distance, site number)` order) and its distance for
/// every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApexLabels {
    pub owner: Vec<Option<SiteId>>,
    pub dist: Vec<Distance>,
}

/// Single-site Voronoi labeling by Dijkstra from a virtual apex joined to
/// every site with a zero-weight edge.
pub fn apex_sssp(
    net: &Network,
    sites: &SiteSet,
    mut trace: Option<TraceSink<'_>>,
) -> Result<ApexLabels> {
    if sites.is_empty() {
        return Err(Error::domain("at least one site required"));
    }
    let n = net.vertex_count();
    let none = SiteId(u32::MAX);
    let mut key: Vec<(Distance, SiteId)> = vec![(Distance::UNREACHABLE, none); n];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();
    for s in sites.ids() {
        let v = sites.vertex(s);
        key[v] = (Distance::ZERO, s);
        heap.push(Reverse((Distance::ZERO, s, v)));
    }
    while let Some(Reverse((d, s, v))) = heap.pop() {
        if done[v] || (d, s) != key[v] {
            continue;
        }
        done[v] = true;
        if let Some(t) = trace.as_mut() {
            t(&SearchEvent {
                kind: EventKind::Settle,
                vertex: v,
                origin: Origin::Apex,
                distance: d,
            });
        }
        for (u, w) in net.neighbors(v) {
            let cand = (d + w, s);
            if !done[u] && cand < key[u] {
                key[u] = cand;
                heap.push(Reverse((cand.0, s, u)));
                if let Some(t) = trace.as_mut() {
                    t(&SearchEvent {
                        kind: EventKind::Relax,
                        vertex: u,
                        origin: Origin::Apex,
                        distance: cand.0,
                    });
                }
            }
        }
    }
    Ok(ApexLabels {
        owner: key.iter().map(|&(_, s)| (s != none).then_some(s)).collect(),
        dist: key.iter().map(|&(d, _)| d).collect(),
    })
}
