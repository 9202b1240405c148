//! Single-site, two-site sum, and order-C sum Voronoi diagrams.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::engine::{apex_sssp, interleaved_multisource, Budget, SearchOptions, TraceSink};
use crate::error::{Error, Result};
use crate::network::{Network, VertexId};
use crate::sites::{SiteId, SiteSet};
use crate::weight::{Distance, Weight};

/// Owner site (or `None` when no site is reachable) and distance per vertex.
pub fn single_site_diagram(
    net: &Network,
    sites: &SiteSet,
) -> Result<Vec<(Option<SiteId>, Distance)>> {
    let labels = apex_sssp(net, sites, None)?;
    Ok(labels.owner.into_iter().zip(labels.dist).collect())
}

/// Nearest and second-nearest site of a vertex.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumLabel {
    pub r1: Option<SiteId>,
    pub d1: Distance,
    pub r2: Option<SiteId>,
    pub d2: Distance,
}

impl SumLabel {
    pub fn entries(&self) -> Vec<(SiteId, Distance)> {
        [(self.r1, self.d1), (self.r2, self.d2)]
            .into_iter()
            .filter_map(|(r, d)| r.map(|r| (r, d)))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct SumDiagram {
    pub labels: Vec<SumLabel>,
    /// Most queue entries that were simultaneously current (not stale).
    pub max_live_entries: usize,
}

const NO_SITE: SiteId = SiteId(u32::MAX);

#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Key {
    First,
    Second,
}

struct SumState {
    d1: Vec<Distance>,
    r1: Vec<SiteId>,
    d2: Vec<Distance>,
    r2: Vec<SiteId>,
    conf1: Vec<bool>,
    conf2: Vec<bool>,
    heap: BinaryHeap<Reverse<(Distance, SiteId, VertexId, Key)>>,
    live: usize,
    max_live: usize,
}

impl SumState {
    fn bump_live(&mut self) {
        self.live += 1;
        self.max_live = self.max_live.max(self.live);
    }

    fn set_first(&mut self, u: VertexId, d: Distance, r: SiteId) {
        if !self.d1[u].is_finite() {
            self.bump_live();
        }
        self.d1[u] = d;
        self.r1[u] = r;
        self.heap.push(Reverse((d, r, u, Key::First)));
    }

    fn set_second(&mut self, u: VertexId, d: Distance, r: SiteId) {
        if !self.d2[u].is_finite() {
            self.bump_live();
        }
        self.d2[u] = d;
        self.r2[u] = r;
        self.heap.push(Reverse((d, r, u, Key::Second)));
    }

    /// One relaxation of edge `(v, u)` offering v's labels to u.
    fn relax(&mut self, v: VertexId, u: VertexId, w: Weight) {
        if self.conf2[u] {
            return;
        }
        if self.conf1[u] {
            let via1 = (self.d1[v] + w, self.r1[v]);
            if via1.0.is_finite() && self.r1[v] != self.r1[u] && via1 < (self.d2[u], self.r2[u]) {
                self.set_second(u, via1.0, via1.1);
            }
            // v's second site can coincide with u's first; it must not become
            // u's second as well.
            let via2 = (self.d2[v] + w, self.r2[v]);
            if via2.0.is_finite() && self.r2[v] != self.r1[u] && via2 < (self.d2[u], self.r2[u]) {
                self.set_second(u, via2.0, via2.1);
            }
        } else {
            let via1 = (self.d1[v] + w, self.r1[v]);
            if via1.0.is_finite() && via1 < (self.d1[u], self.r1[u]) {
                self.set_first(u, via1.0, via1.1);
            }
        }
    }
}

/// Two nearest sites per vertex by the dual-visit queue discipline: each
/// vertex leaves the queue once with its first-neighbor key, re-enters with
/// its second-neighbor key, and leaves again.
///
/// Keys compare as `(distance, site number)`, so ties go to the lower-numbered
/// site.
pub fn two_site_sum_diagram(net: &Network, sites: &SiteSet) -> Result<SumDiagram> {
    if sites.len() < 2 {
        return Err(Error::domain(
            "two-site sum diagram needs at least two sites",
        ));
    }
    let n = net.vertex_count();
    let mut st = SumState {
        d1: vec![Distance::UNREACHABLE; n],
        r1: vec![NO_SITE; n],
        d2: vec![Distance::UNREACHABLE; n],
        r2: vec![NO_SITE; n],
        conf1: vec![false; n],
        conf2: vec![false; n],
        heap: BinaryHeap::new(),
        live: 0,
        max_live: 0,
    };
    for s in sites.ids() {
        st.set_first(sites.vertex(s), Distance::ZERO, s);
    }
    while let Some(Reverse((d, r, v, key))) = st.heap.pop() {
        match key {
            Key::First => {
                if st.conf1[v] || (d, r) != (st.d1[v], st.r1[v]) {
                    continue;
                }
                st.conf1[v] = true;
                st.live -= 1;
                if st.d2[v].is_finite() {
                    st.bump_live();
                    st.heap.push(Reverse((st.d2[v], st.r2[v], v, Key::Second)));
                }
                for (u, w) in net.neighbors(v) {
                    st.relax(v, u, w);
                    st.relax(u, v, w);
                }
            }
            Key::Second => {
                if st.conf2[v] || !st.conf1[v] || (d, r) != (st.d2[v], st.r2[v]) {
                    continue;
                }
                st.conf2[v] = true;
                st.live -= 1;
                for (u, w) in net.neighbors(v) {
                    st.relax(v, u, w);
                }
            }
        }
    }
    let site = |r: SiteId| (r != NO_SITE).then_some(r);
    let labels = (0..n)
        .map(|v| SumLabel {
            r1: site(st.r1[v]),
            d1: st.d1[v],
            r2: site(st.r2[v]),
            d2: st.d2[v],
        })
        .collect();
    Ok(SumDiagram {
        labels,
        max_live_entries: st.max_live,
    })
}

/// The `c` nearest sites of every vertex, sorted by `(distance, site number)`.
/// Vertices reaching fewer than `c` sites get shorter lists.
pub fn order_c_sum_diagram(
    net: &Network,
    sites: &SiteSet,
    c: usize,
    trace: Option<TraceSink<'_>>,
) -> Result<Vec<Vec<(SiteId, Distance)>>> {
    if c == 0 || c > sites.len() {
        return Err(Error::domain(format!(
            "order must lie in 1..={}",
            sites.len()
        )));
    }
    let run = interleaved_multisource(
        net,
        sites,
        Budget::Limited(c - 1),
        None,
        SearchOptions {
            classes: None,
            trace,
        },
    )?;
    Ok(run.lists.into_iter().map(|l| l.into_entries()).collect())
}
