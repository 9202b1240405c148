use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::generate::Instance;
use super::oracle::{oracle_roundtrip, OracleBudget};
use crate::engine::sssp;
use crate::error::Result;
use crate::roundtrip::{roundtrip, Algorithm, PairLabel};
use crate::sites::{PairRule, SitePair};

/// An algorithm configuration under test.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Variant {
    Brute,
    Revised(usize),
    /// Revised with `B = k` for the instance at hand.
    RevisedK,
    Dynamic,
    /// Harness self-test fixture: brute force with ties resolved toward the
    /// largest pair. Wrong on any instance with a tied vertex.
    FaultyTieBreak,
}

impl Variant {
    pub const DEFAULTS: [Variant; 6] = [
        Variant::Brute,
        Variant::Revised(0),
        Variant::Revised(2),
        Variant::Revised(4),
        Variant::RevisedK,
        Variant::Dynamic,
    ];

    fn run(self, inst: &Instance, rule: PairRule) -> Result<Vec<PairLabel>> {
        let algorithm = match self {
            Variant::Brute => Algorithm::Brute,
            Variant::Revised(b) => Algorithm::Revised(b),
            Variant::RevisedK => Algorithm::Revised(inst.sites.len()),
            Variant::Dynamic => Algorithm::Dynamic,
            Variant::FaultyTieBreak => return Ok(faulty_labels(inst, rule)),
        };
        Ok(roundtrip(&inst.net, &inst.sites, algorithm, rule)?.labels)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Brute => f.write_str("brute"),
            Variant::Revised(b) => write!(f, "revised({b})"),
            Variant::RevisedK => f.write_str("revised(k)"),
            Variant::Dynamic => f.write_str("dynamic"),
            Variant::FaultyTieBreak => f.write_str("faulty"),
        }
    }
}

impl FromStr for Variant {
    type Err = String;

    /// `brute`, `dynamic`, `revised(B)` / `revised:B`, `revised(k)`, `faulty`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        match s {
            "brute" => return Ok(Variant::Brute),
            "dynamic" => return Ok(Variant::Dynamic),
            "faulty" => return Ok(Variant::FaultyTieBreak),
            _ => {}
        }
        let arg = s
            .strip_prefix("revised(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| s.strip_prefix("revised:"))
            .ok_or_else(|| format!("unknown variant `{s}`"))?;
        if arg == "k" {
            Ok(Variant::RevisedK)
        } else {
            arg.parse()
                .map(Variant::Revised)
                .map_err(|_| format!("bad bound in `{s}`"))
        }
    }
}

fn faulty_labels(inst: &Instance, rule: PairRule) -> Vec<PairLabel> {
    let sites = &inst.sites;
    let dist: Vec<_> = sites
        .ids()
        .map(|s| sssp(&inst.net, sites.vertex(s), None))
        .collect();
    (0..inst.net.vertex_count())
        .map(|v| {
            let mut best = PairLabel::NONE;
            for a in sites.ids() {
                for b in sites.ids().filter(|&b| b > a && rule.admits(sites, a, b)) {
                    let dp =
                        dist[a.index()][v] + dist[b.index()][v] + dist[a.index()][sites.vertex(b)];
                    let pair = SitePair { lo: a, hi: b };
                    if dp.is_finite() && (best.pair.is_none() || dp <= best.dp) {
                        best = PairLabel {
                            pair: Some(pair),
                            dp,
                        };
                    }
                }
            }
            best
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail {
        variant: Variant,
        vertex: usize,
        expected: PairLabel,
        got: PairLabel,
    },
    Error(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub seed: u64,
    pub outcome: Outcome,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Pass => write!(f, "PASS {}", self.seed),
            Outcome::Fail {
                variant,
                vertex,
                expected,
                got,
            } => write!(
                f,
                "FAIL {} vertex={} expected={} got={}:{}",
                self.seed,
                vertex + 1,
                expected,
                variant,
                got
            ),
            Outcome::Error(msg) => write!(f, "FAIL {} error={}", self.seed, msg),
        }
    }
}

/// Runs the oracle and every variant on one instance; reports the first
/// vertex where any variant disagrees.
pub fn check_instance(inst: &Instance, variants: &[Variant], colored: bool) -> Verdict {
    let rule = if colored {
        PairRule::CrossColor
    } else {
        PairRule::AnyTwo
    };
    let outcome = match oracle_roundtrip(&inst.net, &inst.sites, colored, OracleBudget::default()) {
        Err(e) => Outcome::Error(e.to_string()),
        Ok((expected, _)) => variants
            .iter()
            .find_map(|&variant| match variant.run(inst, rule) {
                Err(e) => Some(Outcome::Error(format!("{variant}: {e}"))),
                Ok(got) => expected
                    .iter()
                    .zip(&got)
                    .position(|(e, g)| e != g)
                    .map(|vertex| Outcome::Fail {
                        variant,
                        vertex,
                        expected: expected[vertex],
                        got: got[vertex],
                    }),
            })
            .unwrap_or(Outcome::Pass),
    };
    Verdict {
        seed: inst.seed,
        outcome,
    }
}

#[derive(Clone, Debug, Default)]
pub struct HarnessReport {
    pub verdicts: Vec<Verdict>,
}

impl HarnessReport {
    pub fn passed(&self) -> usize {
        self.verdicts
            .iter()
            .filter(|v| v.outcome == Outcome::Pass)
            .count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.verdicts.len()
    }
}

impl fmt::Display for HarnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.verdicts {
            writeln!(f, "{v}")?;
        }
        writeln!(f, "TOTAL {}/{}", self.passed(), self.verdicts.len())
    }
}

/// Checks every instance; with `jobs > 1` instances run on a worker pool.
/// Verdicts keep input order either way.
pub fn equivalence_harness(
    instances: Vec<Instance>,
    variants: &[Variant],
    colored: bool,
    jobs: usize,
) -> HarnessReport {
    let verdicts = if jobs > 1 {
        match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| {
                instances
                    .par_iter()
                    .map(|i| check_instance(i, variants, colored))
                    .collect()
            }),
            Err(_) => instances
                .iter()
                .map(|i| check_instance(i, variants, colored))
                .collect(),
        }
    } else {
        instances
            .iter()
            .map(|i| check_instance(i, variants, colored))
            .collect()
    };
    HarnessReport { verdicts }
}
