//! Run manifests: provenance, resource counters, verdicts and assumptions.
//!
//! Every CLI invocation writes one manifest next to its data output.  The
//! manifest is the only artifact that may differ between identical runs
//! (its timings are wall-clock); tables, CSV and JSON are byte-identical
//! for identical configurations.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::groebner;

/// Wall-clock duration of one unit of work.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaskTiming {
    /// Stable task label, e.g. `function:alpha=1:q=8`.
    pub task: String,
    pub millis: u64,
}

impl TaskTiming {
    pub fn since(task: impl Into<String>, start: Instant) -> TaskTiming {
        TaskTiming {
            task: task.into(),
            millis: start.elapsed().as_millis() as u64,
        }
    }
}

/// A semidecision together with the assumptions it rests on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub case: String,
    pub verdict: String,
    #[serde(default)]
    pub assumptions: Vec<String>,
}

/// Provenance record of one CLI run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool: String,
    pub tool_version: String,
    pub subcommand: String,
    /// Path of the configuration file, or `builtin:<name>` for library runs.
    pub config_source: String,
    /// SHA-256 of the configuration bytes (or of the builtin descriptor).
    pub config_hash: String,
    /// Effective option values after flag/environment/config resolution.
    pub options: BTreeMap<String, String>,
    /// S-pair budget in force during the run.
    pub pair_budget: u64,
    /// Total S-pairs reduced across the run (resource counter).
    pub pairs_processed: u64,
    pub timings: Vec<TaskTiming>,
    pub verdicts: Vec<VerdictRecord>,
    pub assumptions: Vec<String>,
}

impl RunManifest {
    /// Starts a manifest for the given subcommand; counters are filled by
    /// [`RunManifest::finish`].
    pub fn begin(subcommand: &str, config_source: &str, config_bytes: &[u8]) -> RunManifest {
        RunManifest {
            tool: String::from("hk"),
            tool_version: String::from(env!("CARGO_PKG_VERSION")),
            subcommand: subcommand.to_string(),
            config_source: config_source.to_string(),
            config_hash: sha256_hex(config_bytes),
            options: BTreeMap::new(),
            pair_budget: groebner::pair_budget(),
            pairs_processed: 0,
            timings: Vec::new(),
            verdicts: Vec::new(),
            assumptions: Vec::new(),
        }
    }

    /// Records an effective option value.
    pub fn set_option(&mut self, key: &str, value: impl ToString) {
        self.options.insert(key.to_string(), value.to_string());
    }

    /// Snapshots the global resource counters; call once, after all work.
    pub fn finish(&mut self) {
        self.pair_budget = groebner::pair_budget();
        self.pairs_processed = groebner::pairs_processed();
        self.assumptions.sort();
        self.assumptions.dedup();
    }

    pub fn to_json(&self) -> Result<String> {
        let mut text = serde_json::to_string_pretty(self)
            .map_err(|e| Error::Io(std::io::Error::other(format!("serializing manifest: {e}"))))?;
        text.push('\n');
        Ok(text)
    }
}

/// Lowercase hex SHA-256 of the input.
pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut out = String::with_capacity(64);
    for byte in digest {
        out.push_str(&format!("{byte:02x}"));
    }
    out
}
