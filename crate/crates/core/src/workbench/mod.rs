//! Synthetic instances, the from-every-vertex oracle, and the equivalence
//! harness that cross-checks all round-trip algorithms against it.

mod generate;
mod harness;
mod oracle;

pub(crate) use generate::SITE_STREAM;
pub use generate::{
    corpus_instance, generate, place_sites, Family, GeneratorConfig, Instance, WeightModel,
    RNG_ALGORITHM,
};
pub use harness::{check_instance, equivalence_harness, HarnessReport, Outcome, Variant, Verdict};
pub use oracle::{oracle_roundtrip, DistanceMatrix, OracleBudget};
