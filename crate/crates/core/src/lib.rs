//! Voronoi diagrams on weighted undirected networks: single-site, two-site
//! sum, order-C sum, and the two-site and two-color round-trip diagrams,
//! with doubling-density instrumentation and a brute-force oracle.
//!
//! Distances are exact fixed-point integers (micro-units), so every
//! algorithm is expected to agree bit-for-bit with every other.

pub mod classic;
pub mod density;
pub mod engine;
pub mod error;
pub mod format;
pub mod network;
pub mod roundtrip;
pub mod sites;
pub mod weight;
pub mod workbench;

pub use classic::{
    order_c_sum_diagram, single_site_diagram, two_site_sum_diagram, SumDiagram, SumLabel,
};
pub use density::{density_report, doubling_density, scaling_sweep, DensityReport, TargetClass};
pub use engine::RunStats;
pub use error::{Error, Result};
pub use network::{load_network, Network, NetworkBuilder, VertexId};
pub use roundtrip::{
    build_candidate_table, roundtrip, roundtrip_brute, roundtrip_dynamic, roundtrip_revised,
    roundtrip_traced, roundtrip_two_color, Algorithm, CandidatePairTable, PairLabel, RoundTripRun,
};
pub use sites::{load_sites, Color, PairRule, SiteId, SitePair, SiteSet};
pub use weight::{Distance, Weight};
