use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::network::{Network, NetworkBuilder};
use crate::sites::{Color, SiteSet};
use crate::weight::Weight;

/// Generator behind every seeded stream; recorded in run manifests.
pub const RNG_ALGORITHM: &str = "ChaCha8 (rand_chacha 0.3, SeedableRng::seed_from_u64)";

#[derive(Copy, Clone, Debug, PartialEq)]
pub enum Family {
    Grid {
        rows: usize,
        cols: usize,
    },
    /// `n` uniform points in the unit square joined within `radius`, weighted
    /// by Euclidean length, restricted to the largest component.
    RandomGeometric {
        n: usize,
        radius: f64,
    },
    Path {
        n: usize,
    },
    Star {
        leaves: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum WeightModel {
    Unit,
    /// Micro-unit weights drawn uniformly from `lo..=hi`.
    Uniform {
        lo: Weight,
        hi: Weight,
    },
}

#[derive(Copy, Clone, Debug, PartialEq)]
pub struct GeneratorConfig {
    pub family: Family,
    /// Ignored by `RandomGeometric`, whose weights are edge lengths.
    pub weights: WeightModel,
    pub seed: u64,
}

impl GeneratorConfig {
    pub fn new(family: Family) -> Self {
        GeneratorConfig {
            family,
            weights: WeightModel::Unit,
            seed: 0,
        }
    }
}

fn draw_weight(model: WeightModel, rng: &mut ChaCha8Rng) -> Weight {
    match model {
        WeightModel::Unit => Weight::UNIT,
        WeightModel::Uniform { lo, hi } => {
            Weight::from_micros(rng.gen_range(lo.micros()..=hi.micros()))
        }
    }
}

pub fn generate(cfg: &GeneratorConfig) -> Result<Network> {
    if let WeightModel::Uniform { lo, hi } = cfg.weights {
        if lo > hi {
            return Err(Error::domain("uniform weights need lo <= hi"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    match cfg.family {
        Family::Grid { rows, cols } => {
            if rows == 0 || cols == 0 {
                return Err(Error::domain("grid needs rows, cols >= 1"));
            }
            let mut b = NetworkBuilder::new(rows * cols);
            for r in 0..rows {
                for c in 0..cols {
                    let v = r * cols + c;
                    if c + 1 < cols {
                        b.add_edge(v, v + 1, draw_weight(cfg.weights, &mut rng));
                    }
                    if r + 1 < rows {
                        b.add_edge(v, v + cols, draw_weight(cfg.weights, &mut rng));
                    }
                }
            }
            Ok(b.build())
        }
        Family::Path { n } => {
            if n == 0 {
                return Err(Error::domain("path needs n >= 1"));
            }
            let mut b = NetworkBuilder::new(n);
            for v in 1..n {
                b.add_edge(v - 1, v, draw_weight(cfg.weights, &mut rng));
            }
            Ok(b.build())
        }
        Family::Star { leaves } => {
            if leaves == 0 {
                return Err(Error::domain("star needs at least one leaf"));
            }
            let mut b = NetworkBuilder::new(leaves + 1);
            for leaf in 1..=leaves {
                b.add_edge(0, leaf, draw_weight(cfg.weights, &mut rng));
            }
            Ok(b.build())
        }
        Family::RandomGeometric { n, radius } => {
            if n == 0 {
                return Err(Error::domain("random geometric graph needs n >= 1"));
            }
            if !(radius > 0.0 && radius.is_finite()) {
                return Err(Error::domain("random geometric graph needs radius > 0"));
            }
            let points: Vec<(f64, f64)> = (0..n)
                .map(|_| (rng.gen::<f64>(), rng.gen::<f64>()))
                .collect();
            Ok(largest_component(&geometric_edges(&points, radius)))
        }
    }
}

fn geometric_edges(points: &[(f64, f64)], radius: f64) -> NetworkBuilder {
    let n = points.len();
    let cells = ((1.0 / radius).floor() as usize).clamp(1, 4096);
    let cell_of = |x: f64| ((x * cells as f64) as usize).min(cells - 1);
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); cells * cells];
    for (i, &(x, y)) in points.iter().enumerate() {
        buckets[cell_of(y) * cells + cell_of(x)].push(i);
    }
    let mut b = NetworkBuilder::new(n);
    let r2 = radius * radius;
    for (i, &(x, y)) in points.iter().enumerate() {
        let (cx, cy) = (cell_of(x), cell_of(y));
        for ny in cy.saturating_sub(1)..=(cy + 1).min(cells - 1) {
            for nx in cx.saturating_sub(1)..=(cx + 1).min(cells - 1) {
                for &j in &buckets[ny * cells + nx] {
                    if j <= i {
                        continue;
                    }
                    let (dx, dy) = (points[j].0 - x, points[j].1 - y);
                    let dd = dx * dx + dy * dy;
                    if dd <= r2 {
                        let micros = (dd.sqrt() * crate::weight::SCALE as f64).round() as u64;
                        b.add_edge(i, j, Weight::from_micros(micros));
                    }
                }
            }
        }
    }
    b
}

/// Keeps the largest connected component (lowest vertex id wins ties),
/// renumbering survivors in their original order.
fn largest_component(b: &NetworkBuilder) -> Network {
    let full = b.build();
    let n = full.vertex_count();
    let mut comp = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        let mut stack = vec![start];
        comp[start] = id;
        let mut size = 0;
        while let Some(v) = stack.pop() {
            size += 1;
            for (u, _) in full.neighbors(v) {
                if comp[u] == usize::MAX {
                    comp[u] = id;
                    stack.push(u);
                }
            }
        }
        sizes.push(size);
    }
    let best = (0..sizes.len())
        .max_by_key(|&c| (sizes[c], std::cmp::Reverse(c)))
        .unwrap_or(0);
    let mut new_id = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if comp[v] == best {
            new_id[v] = next;
            next += 1;
        }
    }
    let mut out = NetworkBuilder::new(next);
    for (a, c, w) in full.edges() {
        if comp[a] == best {
            out.add_edge(new_id[a], new_id[c], w);
        }
    }
    out.build()
}

/// `k` distinct vertices sampled uniformly without replacement. Colored sets
/// alternate S, T, S, ... in sampled order.
pub fn place_sites(net: &Network, k: usize, colored: bool, seed: u64) -> Result<SiteSet> {
    let n = net.vertex_count();
    if k > n {
        return Err(Error::domain(format!(
            "cannot place {k} sites on {n} vertices"
        )));
    }
    if colored && k < 2 {
        return Err(Error::domain("colored placement needs k >= 2"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vertices = sample(&mut rng, n, k).into_vec();
    if colored {
        let colors = (0..k)
            .map(|i| if i % 2 == 0 { Color::S } else { Color::T })
            .collect();
        SiteSet::colored(n, vertices, colors)
    } else {
        SiteSet::new(n, vertices)
    }
}

/// A generated network with its sites.
#[derive(Clone, Debug)]
pub struct Instance {
    pub seed: u64,
    pub net: Network,
    pub sites: SiteSet,
}

pub(crate) const SITE_STREAM: u64 = 0x9e37_79b9_7f4a_7c15;

/// Deterministic test-corpus instance: grids on even seeds, random geometric
/// graphs on odd ones, at most `max_n` vertices and `max_k` sites.
pub fn corpus_instance(seed: u64, max_n: usize, max_k: usize, colored: bool) -> Result<Instance> {
    if max_n < 2 || max_k < 2 {
        return Err(Error::domain("corpus needs max_n >= 2 and max_k >= 2"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Tiny weights in micro-units make exact ties common.
    let weights = match rng.gen_range(0..3) {
        0 => WeightModel::Unit,
        1 => WeightModel::Uniform {
            lo: Weight::from_micros(1),
            hi: Weight::from_micros(4),
        },
        _ => WeightModel::Uniform {
            lo: Weight::from_micros(1),
            hi: Weight::from_micros(1_000_000),
        },
    };
    let mut attempt = 0u64;
    let net = loop {
        let family = if max_n < 4 {
            Family::Path { n: max_n }
        } else if seed.is_multiple_of(2) {
            let side = (max_n as f64).sqrt() as usize;
            let rows = rng.gen_range(1..=side.max(1));
            let cols = rng.gen_range(2..=(max_n / rows).max(2));
            Family::Grid {
                rows,
                cols: cols.min(max_n / rows),
            }
        } else {
            Family::RandomGeometric {
                n: rng.gen_range(2.max(max_n / 4)..=max_n),
                radius: rng.gen_range(0.12..0.35),
            }
        };
        let cfg = GeneratorConfig {
            family,
            weights,
            seed: seed.wrapping_add(attempt.wrapping_mul(SITE_STREAM)),
        };
        let net = generate(&cfg)?;
        if net.vertex_count() >= 2 {
            break net;
        }
        attempt += 1;
    };
    let k = rng.gen_range(2..=max_k.min(net.vertex_count()));
    let sites = place_sites(&net, k, colored, seed ^ SITE_STREAM)?;
    Ok(Instance { seed, net, sites })
}
