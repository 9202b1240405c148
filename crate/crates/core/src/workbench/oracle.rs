//! Reference answers computed from first principles.
//!
//! Deliberately shares no code with the diagram algorithms: its own heap
//! loop over raw micro-unit integers, searches from every vertex rather than
//! from sites, and pairs enumerated in reverse order.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::network::{Network, VertexId};
use crate::roundtrip::PairLabel;
use crate::sites::{Color, SiteId, SitePair, SiteSet};
use crate::weight::Distance;

const INF: u64 = u64::MAX;

/// Limits on oracle work.
#[derive(Copy, Clone, Debug)]
pub struct OracleBudget {
    pub max_vertices: usize,
    /// Bound on `n·k²`.
    pub max_pair_work: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 2_000,
            max_pair_work: 200_000_000,
        }
    }
}

/// All-pairs vertex distances.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u64>,
}

impl DistanceMatrix {
    pub fn new(net: &Network) -> DistanceMatrix {
        let n = net.vertex_count();
        let mut d = vec![INF; n * n];
        for src in 0..n {
            let row = &mut d[src * n..(src + 1) * n];
            let mut heap = BinaryHeap::new();
            row[src] = 0;
            heap.push(Reverse((0u64, src)));
            while let Some(Reverse((dist, v))) = heap.pop() {
                if dist != row[v] {
                    continue;
                }
                for (u, w) in net.neighbors(v) {
                    let nd = dist + w.micros();
                    if nd < row[u] {
                        row[u] = nd;
                        heap.push(Reverse((nd, u)));
                    }
                }
            }
        }
        DistanceMatrix { n, d }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: VertexId, b: VertexId) -> Distance {
        match self.d[a * self.n + b] {
            INF => Distance::UNREACHABLE,
            x => Distance::from_micros(x),
        }
    }

    /// Every reachable site of `v`, sorted by `(distance, site number)`.
    pub fn sorted_sites(&self, sites: &SiteSet, v: VertexId) -> Vec<(SiteId, Distance)> {
        let mut out: Vec<_> = sites
            .ids()
            .map(|s| (s, self.get(v, sites.vertex(s))))
            .filter(|e| e.1.is_finite())
            .collect();
        out.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
        out
    }
}

/// Round-trip labels by exhaustive enumeration over an all-vertex distance
/// matrix. `colored` restricts pairs to one S and one T site.
pub fn oracle_roundtrip(
    net: &Network,
    sites: &SiteSet,
    colored: bool,
    budget: OracleBudget,
) -> Result<(Vec<PairLabel>, DistanceMatrix)> {
    let n = net.vertex_count();
    let k = sites.len();
    if n > budget.max_vertices || (n as u64).saturating_mul((k * k) as u64) > budget.max_pair_work {
        return Err(Error::Budget(format!(
            "oracle refused: n={n}, k={k} exceeds budget {budget:?}"
        )));
    }
    if colored && !sites.is_colored() {
        return Err(Error::domain("colored oracle needs a colored site set"));
    }
    let dm = DistanceMatrix::new(net);
    let allowed = |a: usize, b: usize| {
        !colored || {
            let ca = sites.color(SiteId(a as u32));
            let cb = sites.color(SiteId(b as u32));
            matches!(
                (ca, cb),
                (Some(Color::S), Some(Color::T)) | (Some(Color::T), Some(Color::S))
            )
        }
    };
    let mut labels = Vec::with_capacity(n);
    for v in 0..n {
        let mut best: Option<(u64, usize, usize)> = None;
        for hi in (0..k).rev() {
            for lo in (0..hi).rev() {
                if !allowed(lo, hi) {
                    continue;
                }
                let (a, b) = (
                    sites.vertex(SiteId(lo as u32)),
                    sites.vertex(SiteId(hi as u32)),
                );
                let (va, vb, ab) = (dm.d[v * n + a], dm.d[v * n + b], dm.d[a * n + b]);
                if va == INF || vb == INF || ab == INF {
                    continue;
                }
                let cand = (va + vb + ab, lo, hi);
                if best.is_none_or(|b| cand < b) {
                    best = Some(cand);
                }
            }
        }
        labels.push(match best {
            Some((dp, lo, hi)) => PairLabel {
                pair: Some(SitePair {
                    lo: SiteId(lo as u32),
                    hi: SiteId(hi as u32),
                }),
                dp: Distance::from_micros(dp),
            },
            None => PairLabel::NONE,
        });
    }
    Ok((labels, dm))
}
