use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Serialize)]
struct FileDigest {
    path: String,
    sha256: String,
}

#[derive(Serialize)]
struct PhaseTiming {
    phase: String,
    millis: f64,
}

/// Everything needed to rerun a command: argv, parsed flags, input digests,
/// seeds, version and RNG. Output digests and timings are informational.
#[derive(Serialize)]
pub struct RunManifest {
    schema_version: u32,
    command: String,
    argv: Vec<String>,
    flags: serde_json::Value,
    version: &'static str,
    rng: &'static str,
    seeds: Vec<u64>,
    inputs: Vec<FileDigest>,
    outputs: Vec<FileDigest>,
    timings: Vec<PhaseTiming>,
    #[serde(skip)]
    clock: Instant,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

impl RunManifest {
    pub fn new(command: &str, flags: &impl Serialize) -> Self {
        RunManifest {
            schema_version: 1,
            command: command.to_string(),
            argv: std::env::args().collect(),
            flags: serde_json::to_value(flags).unwrap_or(serde_json::Value::Null),
            version: env!("CARGO_PKG_VERSION"),
            rng: rtv_core::workbench::RNG_ALGORITHM,
            seeds: Vec::new(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            timings: Vec::new(),
            clock: Instant::now(),
        }
    }

    pub fn input(&mut self, path: &Path, bytes: &[u8]) {
        self.inputs.push(FileDigest {
            path: path.display().to_string(),
            sha256: sha256_hex(bytes),
        });
    }

    pub fn output(&mut self, path: &Path, bytes: &[u8]) {
        self.outputs.push(FileDigest {
            path: path.display().to_string(),
            sha256: sha256_hex(bytes),
        });
    }

    pub fn seed(&mut self, seed: u64) {
        self.seeds.push(seed);
    }

    /// Records time since the previous mark under `phase`.
    pub fn mark(&mut self, phase: &str) {
        let now = Instant::now();
        let millis = now.duration_since(self.clock).as_secs_f64() * 1e3;
        self.timings.push(PhaseTiming {
            phase: phase.to_string(),
            millis,
        });
        self.clock = now;
    }
}

/// `<path>.manifest.json` next to the primary output.
pub fn sibling(path: &Path) -> PathBuf {
    let mut name = path.file_name().unwrap_or_default().to_os_string();
    name.push(".manifest.json");
    path.with_file_name(name)
}
