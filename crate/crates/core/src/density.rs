//! Doubling density and the instrumentation report built on top of the
//! candidate table, the dynamic search and the revised algorithm.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::engine::{Flow, RunStats, SingleSource};
use crate::error::{Error, Result};
use crate::network::{Network, VertexId};
use crate::roundtrip::{
    build_candidate_table, roundtrip_dynamic_with_table, roundtrip_revised_with,
};
use crate::sites::{Color, PairRule, SiteSet};
use crate::weight::Distance;
use crate::workbench::{generate, place_sites, Family, GeneratorConfig, SITE_STREAM};

/// Which sites count toward a vertex's density.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TargetClass {
    AllOther,
    S,
    T,
}

impl From<Color> for TargetClass {
    fn from(c: Color) -> Self {
        match c {
            Color::S => TargetClass::S,
            Color::T => TargetClass::T,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Density {
    pub count: usize,
    /// Distance to the nearest admissible site; `UNREACHABLE` when none.
    pub radius: Distance,
}

impl Density {
    /// No admissible site is reachable; `count` is 0 by convention.
    pub fn is_isolated(&self) -> bool {
        !self.radius.is_finite()
    }
}

/// Number of admissible sites other than `v` itself within twice the
/// distance from `v` to the nearest one. Boundary inclusive.
pub fn doubling_density(
    net: &Network,
    sites: &SiteSet,
    v: VertexId,
    target: TargetClass,
) -> Result<Density> {
    let mut search = SingleSource::new(net.vertex_count());
    doubling_density_in(&mut search, net, sites, v, target)
}

fn doubling_density_in(
    search: &mut SingleSource,
    net: &Network,
    sites: &SiteSet,
    v: VertexId,
    target: TargetClass,
) -> Result<Density> {
    if v >= net.vertex_count() {
        return Err(Error::domain(format!("vertex {} out of range", v + 1)));
    }
    if target != TargetClass::AllOther && !sites.is_colored() {
        return Err(Error::domain("color target on an uncolored site set"));
    }
    let admissible = |u: VertexId| match sites.site_at(u) {
        Some(s) if u != v => match target {
            TargetClass::AllOther => true,
            TargetClass::S => sites.color(s) == Some(Color::S),
            TargetClass::T => sites.color(s) == Some(Color::T),
        },
        _ => false,
    };
    let mut radius = Distance::UNREACHABLE;
    let mut count = 0;
    let mut stats = RunStats::default();
    search.run(net, v, &mut stats, |u, d| {
        if d > radius.doubled() {
            return Flow::Halt;
        }
        if admissible(u) {
            if !radius.is_finite() {
                radius = d;
            }
            count += 1;
        }
        Flow::Continue
    });
    Ok(Density { count, radius })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityReport {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    /// Candidate pairs.
    pub c: usize,
    pub c_over_k: f64,
    /// Relaxations per edge while building the candidate table.
    pub avg_edge_visits: f64,
    /// Settles per vertex in the pruned dynamic search.
    pub avg_vertex_visits: f64,
    /// Admissible pairs evaluated per vertex in the pruned dynamic search.
    pub avg_pairs_per_vertex: f64,
    /// Case ii vertices of the revised algorithm at `bound`.
    pub case_ii_count: u64,
    pub bound: usize,
    pub two_color: bool,
    pub site_densities: Vec<usize>,
    pub sites_without_partner: u64,
}

fn mean(total: u64, over: usize) -> f64 {
    if over == 0 {
        0.0
    } else {
        total as f64 / over as f64
    }
}

pub fn density_report(
    net: &Network,
    sites: &SiteSet,
    colored: bool,
    bound: usize,
) -> Result<DensityReport> {
    let rule = if colored {
        PairRule::CrossColor
    } else {
        PairRule::AnyTwo
    };
    let (table, table_stats) = build_candidate_table(net, sites, rule)?;
    let dynamic = roundtrip_dynamic_with_table(net, sites, rule, &table, None)?;
    let search = dynamic.total();
    let revised = roundtrip_revised_with(net, sites, bound, rule)?;

    let mut sssp = SingleSource::new(net.vertex_count());
    let site_densities = sites
        .ids()
        .map(|s| {
            let target = match sites.color(s) {
                Some(c) if colored => c.opposite().into(),
                _ => TargetClass::AllOther,
            };
            doubling_density_in(&mut sssp, net, sites, sites.vertex(s), target).map(|d| d.count)
        })
        .collect::<Result<Vec<_>>>()?;

    let (n, m, k, c) = (
        net.vertex_count(),
        net.edge_count(),
        sites.len(),
        table.len(),
    );
    Ok(DensityReport {
        n,
        m,
        k,
        c,
        c_over_k: c as f64 / k as f64,
        avg_edge_visits: mean(table_stats.edge_relaxations, m),
        avg_vertex_visits: mean(search.vertex_visits, n),
        avg_pairs_per_vertex: mean(search.pairs_evaluated, n),
        case_ii_count: revised.total().case_ii_count,
        bound,
        two_color: colored,
        site_densities,
        sites_without_partner: table_stats.sites_without_partner,
    })
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SweepFamily {
    /// Radius chosen for a mean degree near 8.
    RandomGeometric,
    /// Near-square grid with about `n` vertices, unit weights.
    Grid,
    Path,
    /// Rung value is the leaf count; every leaf is a site.
    Star,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum KRule {
    Sqrt,
    Fixed(usize),
}

impl KRule {
    pub fn k_for(self, n: usize) -> usize {
        match self {
            KRule::Sqrt => (n as f64).sqrt().ceil() as usize,
            KRule::Fixed(k) => k,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub family: SweepFamily,
    pub ladder: Vec<usize>,
    pub k_rule: KRule,
    pub seeds: u64,
    pub first_seed: u64,
    pub colored: bool,
    pub bound: usize,
    pub jobs: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    /// Ladder value the instance was generated for.
    pub rung: usize,
    pub seed: u64,
    pub report: DensityReport,
}

#[derive(Clone, Debug, Default)]
pub struct SweepOutput {
    pub rows: Vec<SweepRow>,
    /// One line per skipped rung/seed.
    pub diagnostics: Vec<String>,
}

pub const SWEEP_CSV_HEADER: &str =
    "n,m,k,c,c_over_k,avg_edge_visits,avg_vertex_visits,avg_pairs_per_vertex,A,seed";

impl SweepOutput {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(SWEEP_CSV_HEADER);
        out.push('\n');
        for SweepRow {
            seed, report: r, ..
        } in &self.rows
        {
            let _ = writeln!(
                out,
                "{},{},{},{},{:.6},{:.6},{:.6},{:.6},{},{}",
                r.n,
                r.m,
                r.k,
                r.c,
                r.c_over_k,
                r.avg_edge_visits,
                r.avg_vertex_visits,
                r.avg_pairs_per_vertex,
                r.case_ii_count,
                seed
            );
        }
        out
    }
}

/// Network and sites for one sweep rung and seed.
pub fn sweep_instance(cfg: &SweepConfig, n: usize, seed: u64) -> Result<(Network, SiteSet)> {
    let family = match cfg.family {
        SweepFamily::RandomGeometric => {
            let radius = (8.0 / (std::f64::consts::PI * n.max(1) as f64)).sqrt();
            Family::RandomGeometric { n, radius }
        }
        SweepFamily::Grid => {
            let rows = ((n as f64).sqrt().round() as usize).max(1);
            Family::Grid {
                rows,
                cols: n.div_ceil(rows),
            }
        }
        SweepFamily::Path => Family::Path { n },
        SweepFamily::Star => Family::Star { leaves: n },
    };
    let net = generate(&GeneratorConfig {
        family,
        seed,
        ..GeneratorConfig::new(family)
    })?;
    let sites = if cfg.family == SweepFamily::Star {
        let leaves: Vec<_> = (1..net.vertex_count()).collect();
        if cfg.colored {
            let colors = (0..leaves.len())
                .map(|i| if i % 2 == 0 { Color::S } else { Color::T })
                .collect();
            SiteSet::colored(net.vertex_count(), leaves, colors)?
        } else {
            SiteSet::new(net.vertex_count(), leaves)?
        }
    } else {
        let k = cfg.k_rule.k_for(net.vertex_count()).min(net.vertex_count());
        place_sites(&net, k, cfg.colored, seed ^ SITE_STREAM)?
    };
    Ok((net, sites))
}

/// One density report per (rung, seed), in ladder-then-seed order.
/// Failed instances are skipped and described in `diagnostics`.
pub fn scaling_sweep(cfg: &SweepConfig) -> SweepOutput {
    let jobs: Vec<(usize, u64)> = cfg
        .ladder
        .iter()
        .flat_map(|&n| (0..cfg.seeds).map(move |i| (n, cfg.first_seed + i)))
        .collect();
    let one = |&(n, seed): &(usize, u64)| {
        sweep_instance(cfg, n, seed)
            .and_then(|(net, sites)| density_report(&net, &sites, cfg.colored, cfg.bound))
            .map(|report| SweepRow {
                rung: n,
                seed,
                report,
            })
            .map_err(|e| format!("n={n} seed={seed}: {e}"))
    };
    let results: Vec<_> = if cfg.jobs > 1 {
        match rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
        {
            Ok(pool) => pool.install(|| jobs.par_iter().map(one).collect()),
            Err(_) => jobs.iter().map(one).collect(),
        }
    } else {
        jobs.iter().map(one).collect()
    };
    let mut out = SweepOutput::default();
    for r in results {
        match r {
            Ok(row) => out.rows.push(row),
            Err(msg) => out.diagnostics.push(msg),
        }
    }
    out
}
