//! Shared fixtures for the benchmarks.

use rtv_core::density::{sweep_instance, KRule, SweepConfig, SweepFamily};
use rtv_core::{Network, SiteSet};

/// Random geometric network of about `n` vertices with `ceil(sqrt(n))` sites.
pub fn rgg(n: usize, seed: u64) -> (Network, SiteSet) {
    let cfg = SweepConfig {
        family: SweepFamily::RandomGeometric,
        ladder: vec![n],
        k_rule: KRule::Sqrt,
        seeds: 1,
        first_seed: seed,
        colored: false,
        bound: 8,
        jobs: 1,
    };
    sweep_instance(&cfg, n, seed).expect("benchmark instance")
}
