use std::collections::HashMap;

use super::lemmas::corollary2_radius;
use super::{check_instance, PairLabel, Phase, RoundTripRun};
use crate::engine::{
    interleaved_multisource, Budget, Flow, RunStats, SearchOptions, SingleSource, TraceSink,
};
use crate::error::Result;
use crate::network::Network;
use crate::sites::{Color, PairRule, SiteId, SitePair, SiteSet};
use crate::weight::Distance;

/// Radii read off a vertex's sorted site list.
struct Radii {
    /// Sum of the two nearest sites (nearest of each color for two-color).
    label: Distance,
    /// How far the list must be complete. Equals `label` except at a site,
    /// where it is twice the distance to the nearest admissible partner so
    /// that every pair the site can form with a label partner gets its
    /// distance recorded.
    complete: Distance,
}

fn radii(
    entries: &[(SiteId, Distance)],
    own: Option<SiteId>,
    sites: &SiteSet,
    rule: PairRule,
) -> Radii {
    let label = match rule {
        PairRule::AnyTwo => match entries {
            [a, b, ..] => corollary2_radius(a.1, b.1),
            _ => Distance::UNREACHABLE,
        },
        PairRule::CrossColor => {
            let nearest = |c: Color| {
                entries
                    .iter()
                    .find(|e| sites.color(e.0) == Some(c))
                    .map_or(Distance::UNREACHABLE, |e| e.1)
            };
            corollary2_radius(nearest(Color::S), nearest(Color::T))
        }
    };
    let complete = match own {
        None => label,
        Some(s) => {
            let partner = entries
                .iter()
                .find(|e| rule.admits(sites, s, e.0))
                .map_or(Distance::UNREACHABLE, |e| e.1);
            label.max(partner.doubled())
        }
    };
    Radii { label, complete }
}

/// Revised round-trip diagram with per-vertex visit budget `bound`.
pub fn roundtrip_revised_with(
    net: &Network,
    sites: &SiteSet,
    bound: usize,
    rule: PairRule,
) -> Result<RoundTripRun> {
    roundtrip_revised_traced(net, sites, bound, rule, None)
}

/// [`roundtrip_revised_with`], streaming step-1 search events to `trace`.
pub fn roundtrip_revised_traced(
    net: &Network,
    sites: &SiteSet,
    bound: usize,
    rule: PairRule,
    trace: Option<TraceSink<'_>>,
) -> Result<RoundTripRun> {
    check_instance(sites, rule)?;
    let n = net.vertex_count();

    // Step 1: interleaved searches, each vertex keeps its first B+1 sites
    // (per color class for two-color).
    let step1 = interleaved_multisource(
        net,
        sites,
        Budget::Limited(bound),
        None,
        SearchOptions {
            classes: Some(rule),
            trace,
        },
    )?;
    let mut lists: Vec<Vec<(SiteId, Distance)>> =
        step1.lists.into_iter().map(|l| l.into_entries()).collect();

    let class_count = rule.class_count();
    let mut class_sizes = [0usize; 2];
    for s in sites.ids() {
        class_sizes[rule.class_of(sites, s)] += 1;
    }
    let caps = class_sizes.map(|size| bound.saturating_add(1).min(size));

    // Step 2: vertices whose list cannot certify completeness search for
    // themselves out to their radius.
    let mut step2 = RunStats::default();
    let mut label_radius = vec![Distance::UNREACHABLE; n];
    let mut search = SingleSource::new(n);
    for v in 0..n {
        let own = sites.site_at(v);
        let r = radii(&lists[v], own, sites, rule);
        let complete = (0..class_count).all(|c| {
            let mut in_class = lists[v].iter().filter(|e| rule.class_of(sites, e.0) == c);
            let count = in_class.clone().count();
            let last = in_class.next_back().map_or(Distance::UNREACHABLE, |e| e.1);
            // A list short of its cap holds every reachable site of the class.
            count < caps[c] || count == class_sizes[c] || last > r.complete
        });
        if complete {
            label_radius[v] = r.label;
            continue;
        }

        step2.case_ii_count += 1;
        let mut found: Vec<(SiteId, Distance)> = Vec::new();
        let mut reach = Distance::UNREACHABLE;
        search.run(net, v, &mut step2, |u, d| {
            if d > reach {
                return Flow::Halt;
            }
            if let Some(s) = sites.site_at(u) {
                found.push((s, d));
                reach = radii(&found, own, sites, rule).complete;
            }
            Flow::Continue
        });
        found.sort_unstable_by_key(|&(s, d)| (d, s));
        label_radius[v] = radii(&found, own, sites, rule).label;
        lists[v] = found;
    }

    // Step 3: site-pair distances recorded at either endpoint, then the best
    // pair among each vertex's sites within its label radius.
    let mut between: HashMap<SitePair, Distance> = HashMap::new();
    for s in sites.ids() {
        for &(t, d) in &lists[sites.vertex(s)] {
            if let Some(p) = SitePair::new(s, t) {
                between.insert(p, d);
            }
        }
    }
    let mut step3 = RunStats::default();
    let mut labels = vec![PairLabel::NONE; n];
    for (v, label) in labels.iter_mut().enumerate() {
        let near: Vec<_> = lists[v].iter().filter(|e| e.1 <= label_radius[v]).collect();
        for (i, &&(s, ds)) in near.iter().enumerate() {
            for &&(t, dt) in &near[i + 1..] {
                if !rule.admits(sites, s, t) {
                    continue;
                }
                step3.pairs_evaluated += 1;
                let pair = SitePair::new(s, t).expect("distinct sites");
                if let Some(&dst) = between.get(&pair) {
                    label.offer(pair, ds + dt + dst);
                }
            }
        }
    }

    Ok(RoundTripRun {
        labels,
        phases: vec![
            Phase {
                name: "step1",
                stats: step1.stats,
            },
            Phase {
                name: "step2",
                stats: step2,
            },
            Phase {
                name: "step3",
                stats: step3,
            },
        ],
    })
}
