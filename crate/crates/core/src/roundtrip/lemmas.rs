use std::collections::VecDeque;

use crate::engine::{RunStats, SingleSource};
use crate::error::{Error, Result};
use crate::network::{Network, VertexId};
use crate::sites::{PairRule, SiteId, SiteSet};
use crate::weight::Distance;

/// Whether a site at `d_vs` from a vertex can still belong to its best pair,
/// given a known tour of length `best_dp`: `2·d_vs ≤ best_dp`.
pub fn lemma1_admits(d_vs: Distance, best_dp: Distance) -> bool {
    !best_dp.is_finite() || d_vs.doubled() <= best_dp
}

/// Search radius from a vertex's two nearest sites: no site of the best pair
/// is farther than `d1 + d2`.
pub fn corollary2_radius(d1: Distance, d2: Distance) -> Distance {
    d1 + d2
}

/// True when pair `(s, t)` at distance `d_st` can label no vertex because it
/// exceeds twice both endpoints' nearest-partner distances `r_s` and `r_t`.
pub fn lemma3_excluded(d_st: Distance, r_s: Distance, r_t: Distance) -> bool {
    d_st > r_s.doubled() && d_st > r_t.doubled()
}

/// Test-scale checker for the path-pruning property: does site `s` keep
/// `2·d(w,s) ≤ best round trip at w` at every vertex `w` of some shortest
/// path from `s` to `v`?
pub struct Lemma4Checker<'a> {
    net: &'a Network,
    sites: &'a SiteSet,
    from_site: Vec<Vec<Distance>>,
    best_dp: Vec<Distance>,
}

impl<'a> Lemma4Checker<'a> {
    /// Refuses instances with more than `max_work` units of `n·k²` work.
    pub fn new(
        net: &'a Network,
        sites: &'a SiteSet,
        rule: PairRule,
        max_work: u64,
    ) -> Result<Self> {
        let n = net.vertex_count();
        let k = sites.len();
        if (n as u64).saturating_mul((k * k) as u64) > max_work {
            return Err(Error::Budget(format!(
                "lemma-4 check refused: n={n}, k={k} exceeds test budget"
            )));
        }
        let mut search = SingleSource::new(n);
        let from_site: Vec<Vec<Distance>> = sites
            .ids()
            .map(|s| {
                search.run(net, sites.vertex(s), &mut RunStats::default(), |_, _| {
                    crate::engine::Flow::Continue
                });
                (0..n).map(|v| search.distance(v)).collect()
            })
            .collect();
        let mut best_dp = vec![Distance::UNREACHABLE; n];
        for (w, best) in best_dp.iter_mut().enumerate() {
            for p in 0..k {
                for q in p + 1..k {
                    if rule.admits(sites, SiteId(p as u32), SiteId(q as u32)) {
                        let dp = from_site[p][w]
                            + from_site[q][w]
                            + from_site[p][sites.vertex(SiteId(q as u32))];
                        *best = (*best).min(dp);
                    }
                }
            }
        }
        Ok(Lemma4Checker {
            net,
            sites,
            from_site,
            best_dp,
        })
    }

    /// Smallest admissible round trip from `w`.
    pub fn best_dp(&self, w: VertexId) -> Distance {
        self.best_dp[w]
    }

    pub fn holds(&self, s: SiteId, v: VertexId) -> bool {
        let dist = &self.from_site[s.index()];
        if !dist[v].is_finite() {
            return false;
        }
        let good = |w: VertexId| lemma1_admits(dist[w], self.best_dp[w]);
        let start = self.sites.vertex(s);
        let mut seen = vec![false; self.net.vertex_count()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(a) = queue.pop_front() {
            if a == v {
                return true;
            }
            for (b, w) in self.net.neighbors(a) {
                if !seen[b] && dist[a] + w == dist[b] && good(b) {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        false
    }
}

/// One-shot form of [`Lemma4Checker::holds`] under the one-color pair rule.
pub fn lemma4_holds_on_path(
    net: &Network,
    sites: &SiteSet,
    s: SiteId,
    v: VertexId,
) -> Result<bool> {
    Ok(Lemma4Checker::new(net, sites, PairRule::AnyTwo, 50_000_000)?.holds(s, v))
}
