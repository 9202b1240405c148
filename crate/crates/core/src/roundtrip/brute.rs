use super::{check_instance, PairLabel, Phase, RoundTripRun};
use crate::engine::{Flow, RunStats, SingleSource};
use crate::error::Result;
use crate::network::Network;
use crate::sites::{PairRule, SiteId, SitePair, SiteSet};
use crate::weight::Distance;

/// Brute-force round-trip diagram: one complete search per site, then every
/// admissible pair at every vertex.
pub fn roundtrip_brute_with(
    net: &Network,
    sites: &SiteSet,
    rule: PairRule,
) -> Result<RoundTripRun> {
    check_instance(sites, rule)?;
    let n = net.vertex_count();
    let k = sites.len();

    let mut search_stats = RunStats::with_vertices(n);
    let mut search = SingleSource::new(n);
    let dist: Vec<Vec<Distance>> = sites
        .ids()
        .map(|s| {
            search.run(net, sites.vertex(s), &mut search_stats, |_, _| {
                Flow::Continue
            });
            (0..n).map(|v| search.distance(v)).collect()
        })
        .collect();

    // d(p, q) for every admissible pair, looked up in O(1).
    let between = |p: usize, q: usize| dist[p][sites.vertex(SiteId(q as u32))];
    let admissible: Vec<Vec<usize>> = (0..k)
        .map(|p| {
            (p + 1..k)
                .filter(|&q| rule.admits(sites, SiteId(p as u32), SiteId(q as u32)))
                .collect()
        })
        .collect();

    let mut pair_stats = RunStats::default();
    let mut labels = vec![PairLabel::NONE; n];
    for (v, label) in labels.iter_mut().enumerate() {
        for p in 0..k {
            let dvp = dist[p][v];
            if !dvp.is_finite() {
                continue;
            }
            for &q in &admissible[p] {
                let dvq = dist[q][v];
                if !dvq.is_finite() {
                    continue;
                }
                pair_stats.pairs_evaluated += 1;
                let pair = SitePair {
                    lo: SiteId(p as u32),
                    hi: SiteId(q as u32),
                };
                label.offer(pair, dvp + dvq + between(p, q));
            }
        }
    }

    Ok(RoundTripRun {
        labels,
        phases: vec![
            Phase {
                name: "sssp",
                stats: search_stats,
            },
            Phase {
                name: "pairs",
                stats: pair_stats,
            },
        ],
    })
}
