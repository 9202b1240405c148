use std::collections::HashMap;
use std::fmt::Write as _;

use crate::engine::{Flow, RunStats, SingleSource};
use crate::error::Result;
use crate::network::Network;
use crate::sites::{PairRule, SiteId, SitePair, SiteSet};
use crate::weight::Distance;

/// Exact distances for every site pair that can own a non-empty round-trip
/// region, plus each site's nearest-partner distance `r(s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidatePairTable {
    pairs: HashMap<SitePair, Distance>,
    radius: Vec<Distance>,
}

impl CandidatePairTable {
    pub fn get(&self, pair: SitePair) -> Option<Distance> {
        self.pairs.get(&pair).copied()
    }

    pub fn contains(&self, pair: SitePair) -> bool {
        self.pairs.contains_key(&pair)
    }

    /// Number of candidate pairs, `c`.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Distance from `s` to its nearest admissible partner, `UNREACHABLE` if none.
    pub fn radius(&self, s: SiteId) -> Distance {
        self.radius[s.index()]
    }

    pub fn sorted(&self) -> Vec<(SitePair, Distance)> {
        let mut v: Vec<_> = self.pairs.iter().map(|(&p, &d)| (p, d)).collect();
        v.sort_unstable();
        v
    }

    /// `site_lo<TAB>site_hi<TAB>d` per pair, sorted by `(lo, hi)`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (p, d) in self.sorted() {
            let _ = writeln!(out, "{}\t{}\t{}", p.lo, p.hi, d);
        }
        out
    }
}

/// Searches out from every site until the key exceeds twice the distance to
/// its nearest admissible partner, tabling every admissible site reached.
///
/// Sites exactly at the doubled radius are included.
pub fn build_candidate_table(
    net: &Network,
    sites: &SiteSet,
    rule: PairRule,
) -> Result<(CandidatePairTable, RunStats)> {
    super::check_instance(sites, rule)?;
    let mut stats = RunStats::default();
    let mut pairs = HashMap::new();
    let mut radius = vec![Distance::UNREACHABLE; sites.len()];
    let mut search = SingleSource::new(net.vertex_count());
    for p in sites.ids() {
        let mut nearest = Distance::UNREACHABLE;
        search.run(net, sites.vertex(p), &mut stats, |v, d| {
            if d > nearest.doubled() {
                return Flow::Halt;
            }
            if let Some(q) = sites.site_at(v) {
                if rule.admits(sites, p, q) {
                    if !nearest.is_finite() {
                        nearest = d;
                    }
                    pairs.insert(SitePair::new(p, q).expect("distinct sites"), d);
                }
            }
            Flow::Continue
        });
        radius[p.index()] = nearest;
        if !nearest.is_finite() {
            stats.sites_without_partner += 1;
        }
    }
    Ok((CandidatePairTable { pairs, radius }, stats))
}
