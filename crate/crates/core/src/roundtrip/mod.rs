//! Two-site and two-color round-trip Voronoi diagrams.
//!
//! The round-trip distance from a vertex `v` to a site pair `(s, t)` is
//! `d(v,s) + d(v,t) + d(s,t)`, the length of the shortest tour leaving `v`,
//! visiting both sites and coming back. Every algorithm here labels each
//! vertex with the admissible pair minimizing it, ties going to the smallest
//! `(lo, hi)` pair, and all of them must agree exactly.

mod brute;
mod dynamic;
mod lemmas;
mod revised;
mod table;

use std::fmt;

use serde::Serialize;

pub use brute::roundtrip_brute_with;
pub use dynamic::{roundtrip_dynamic_with, roundtrip_dynamic_with_table};
pub use lemmas::{
    corollary2_radius, lemma1_admits, lemma3_excluded, lemma4_holds_on_path, Lemma4Checker,
};
pub use revised::{roundtrip_revised_traced, roundtrip_revised_with};
pub use table::{build_candidate_table, CandidatePairTable};

use crate::engine::{RunStats, TraceSink};
use crate::error::{Error, Result};
use crate::network::Network;
use crate::sites::{PairRule, SitePair, SiteSet};
use crate::weight::Distance;

/// A vertex's round-trip label: the best admissible pair and its tour length.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PairLabel {
    pub pair: Option<SitePair>,
    pub dp: Distance,
}

impl PairLabel {
    pub const NONE: PairLabel = PairLabel {
        pair: None,
        dp: Distance::UNREACHABLE,
    };

    /// Replaces the label if `(dp, pair)` is lexicographically smaller.
    pub fn offer(&mut self, pair: SitePair, dp: Distance) -> bool {
        if !dp.is_finite() {
            return false;
        }
        let better = match self.pair {
            None => true,
            Some(cur) => (dp, pair) < (self.dp, cur),
        };
        if better {
            self.pair = Some(pair);
            self.dp = dp;
        }
        better
    }
}

impl fmt::Display for PairLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pair {
            Some(p) => write!(f, "{p}:{}", self.dp),
            None => f.write_str("-"),
        }
    }
}

/// Named counters for one phase of an algorithm.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Phase {
    pub name: &'static str,
    pub stats: RunStats,
}

#[derive(Clone, Debug)]
pub struct RoundTripRun {
    pub labels: Vec<PairLabel>,
    pub phases: Vec<Phase>,
}

impl RoundTripRun {
    pub fn phase(&self, name: &str) -> Option<&RunStats> {
        self.phases
            .iter()
            .find(|p| p.name == name)
            .map(|p| &p.stats)
    }

    /// All phases summed.
    pub fn total(&self) -> RunStats {
        let mut total = RunStats::default();
        for p in &self.phases {
            total.merge(&p.stats);
        }
        total
    }
}

/// Which round-trip algorithm to run.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Brute,
    /// Bounded-depth revised algorithm with visit budget `B`.
    Revised(usize),
    Dynamic,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algorithm::Brute => f.write_str("brute"),
            Algorithm::Revised(b) => write!(f, "revised({b})"),
            Algorithm::Dynamic => f.write_str("dynamic"),
        }
    }
}

pub(crate) fn check_instance(sites: &SiteSet, rule: PairRule) -> Result<()> {
    match rule {
        PairRule::AnyTwo if sites.len() < 2 => {
            Err(Error::domain("round-trip diagram needs at least two sites"))
        }
        PairRule::CrossColor if !sites.is_colored() => Err(Error::domain(
            "two-color diagram needs a colored site set with non-empty S and T",
        )),
        _ => Ok(()),
    }
}

/// Runs `algorithm` under the given pair rule.
pub fn roundtrip(
    net: &Network,
    sites: &SiteSet,
    algorithm: Algorithm,
    rule: PairRule,
) -> Result<RoundTripRun> {
    match algorithm {
        Algorithm::Brute => roundtrip_brute_with(net, sites, rule),
        Algorithm::Revised(b) => roundtrip_revised_with(net, sites, b, rule),
        Algorithm::Dynamic => roundtrip_dynamic_with(net, sites, rule),
    }
}

/// [`roundtrip`] streaming search events to `trace`. Brute force runs plain
/// single-source searches and emits nothing; revised traces step 1 and
/// dynamic traces its pruned search.
pub fn roundtrip_traced(
    net: &Network,
    sites: &SiteSet,
    algorithm: Algorithm,
    rule: PairRule,
    trace: Option<TraceSink<'_>>,
) -> Result<RoundTripRun> {
    match algorithm {
        Algorithm::Brute => roundtrip_brute_with(net, sites, rule),
        Algorithm::Revised(b) => roundtrip_revised_traced(net, sites, b, rule, trace),
        Algorithm::Dynamic => {
            check_instance(sites, rule)?;
            let (table, table_stats) = build_candidate_table(net, sites, rule)?;
            let mut run = roundtrip_dynamic_with_table(net, sites, rule, &table, trace)?;
            run.phases.insert(
                0,
                Phase {
                    name: "table",
                    stats: table_stats,
                },
            );
            Ok(run)
        }
    }
}

/// Full site-to-vertex distances, then every pair at every vertex.
pub fn roundtrip_brute(net: &Network, sites: &SiteSet) -> Result<RoundTripRun> {
    roundtrip_brute_with(net, sites, PairRule::AnyTwo)
}

/// Budgeted interleaved search, bounded per-vertex completion searches, then
/// per-vertex pair minimization.
pub fn roundtrip_revised(net: &Network, sites: &SiteSet, bound: usize) -> Result<RoundTripRun> {
    roundtrip_revised_with(net, sites, bound, PairRule::AnyTwo)
}

/// Candidate-pair table, then unbudgeted interleaved search pruned by the
/// best half-perimeter seen at each vertex.
pub fn roundtrip_dynamic(net: &Network, sites: &SiteSet) -> Result<RoundTripRun> {
    roundtrip_dynamic_with(net, sites, PairRule::AnyTwo)
}

/// Two-color diagram: pairs take one S site and one T site.
pub fn roundtrip_two_color(
    net: &Network,
    sites: &SiteSet,
    algorithm: Algorithm,
) -> Result<RoundTripRun> {
    roundtrip(net, sites, algorithm, PairRule::CrossColor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sites::SiteId;

    #[test]
    fn offer_uses_pair_as_tiebreak() {
        let p = |a, b| SitePair::new(SiteId(a), SiteId(b)).unwrap();
        let mut label = PairLabel::NONE;
        assert!(label.offer(p(1, 2), Distance::from_units(4)));
        assert!(label.offer(p(0, 3), Distance::from_units(4)));
        assert!(!label.offer(p(0, 4), Distance::from_units(4)));
        assert!(!label.offer(p(0, 1), Distance::from_units(5)));
        assert!(!label.offer(p(0, 1), Distance::UNREACHABLE));
        assert_eq!(label.to_string(), "(0,3):4.000000");
        assert_eq!(PairLabel::NONE.to_string(), "-");
    }
}
