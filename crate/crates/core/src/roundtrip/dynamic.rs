use super::lemmas::lemma1_admits;
use super::table::CandidatePairTable;
use super::{check_instance, PairLabel, Phase, RoundTripRun};
use crate::engine::{
    interleaved_multisource, Budget, Decision, PruneRule, RunStats, SearchOptions, TraceSink,
};
use crate::error::Result;
use crate::network::{Network, VertexId};
use crate::sites::{PairRule, SiteId, SitePair, SiteSet};
use crate::weight::Distance;

/// Per-vertex best tour over tabled pairs whose searches both reached the
/// vertex; prunes any search arriving farther than half of it.
struct HalfPerimeterRule<'a> {
    sites: &'a SiteSet,
    rule: PairRule,
    table: &'a CandidatePairTable,
    best: Vec<PairLabel>,
    pairs_evaluated: u64,
}

impl PruneRule for HalfPerimeterRule<'_> {
    fn on_settle(
        &mut self,
        site: SiteId,
        v: VertexId,
        dist: Distance,
        settled: &[(SiteId, Distance)],
    ) -> Decision {
        let best = &mut self.best[v];
        for &(other, d_other) in settled {
            if !self.rule.admits(self.sites, site, other) {
                continue;
            }
            self.pairs_evaluated += 1;
            let pair = SitePair::new(site, other).expect("distinct sites");
            if let Some(d_pair) = self.table.get(pair) {
                best.offer(pair, dist + d_other + d_pair);
            }
        }
        if lemma1_admits(dist, best.dp) {
            Decision::Continue
        } else {
            Decision::Stop
        }
    }
}

/// Dynamic-pruning round-trip diagram.
pub fn roundtrip_dynamic_with(
    net: &Network,
    sites: &SiteSet,
    rule: PairRule,
) -> Result<RoundTripRun> {
    super::roundtrip_traced(net, sites, super::Algorithm::Dynamic, rule, None)
}

/// Pruned search phase alone, against a prebuilt candidate table.
pub fn roundtrip_dynamic_with_table(
    net: &Network,
    sites: &SiteSet,
    rule: PairRule,
    table: &CandidatePairTable,
    trace: Option<TraceSink<'_>>,
) -> Result<RoundTripRun> {
    check_instance(sites, rule)?;
    let mut prune = HalfPerimeterRule {
        sites,
        rule,
        table,
        best: vec![PairLabel::NONE; net.vertex_count()],
        pairs_evaluated: 0,
    };
    let run = interleaved_multisource(
        net,
        sites,
        Budget::Unlimited,
        Some(&mut prune),
        SearchOptions {
            classes: None,
            trace,
        },
    )?;
    let mut stats: RunStats = run.stats;
    stats.pairs_evaluated = prune.pairs_evaluated;
    Ok(RoundTripRun {
        labels: prune.best,
        phases: vec![Phase {
            name: "search",
            stats,
        }],
    })
}
