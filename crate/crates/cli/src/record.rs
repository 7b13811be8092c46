use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const RECORD_VERSION: u32 = 1;

/// Everything needed to audit or rerun one invocation.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RunRecord {
    pub version: u32,
    pub command: String,
    /// Arguments after the program name, minus `--record`.
    pub argv: Vec<String>,
    pub parameters: Value,
    pub result: Value,
    pub exit_code: i32,
    pub witness_files: Vec<PathBuf>,
    /// Exactly what was printed on stdout.
    pub output: String,
    pub wall_time_ms: u64,
    /// Timing-dependent solver counters (node counts, cover calls).
    pub stats: Value,
}

impl RunRecord {
    pub fn write(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self)?;
        std::fs::write(path, text + "\n")
            .with_context(|| format!("cannot write run record {}", path.display()))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read run record {}", path.display()))?;
        let rec: RunRecord = serde_json::from_str(&text)
            .with_context(|| format!("{} is not a run record", path.display()))?;
        anyhow::ensure!(
            rec.version == RECORD_VERSION,
            "run record version {} is not supported",
            rec.version
        );
        Ok(rec)
    }
}

/// Drops `--record <path>` and `--record=<path>` from an argument list.
pub fn strip_record_flag(args: &[String]) -> Vec<String> {
    let mut out = Vec::with_capacity(args.len());
    let mut skip = false;
    for a in args {
        if skip {
            skip = false;
            continue;
        }
        if a == "--record" {
            skip = true;
            continue;
        }
        if a.starts_with("--record=") {
            continue;
        }
        out.push(a.clone());
    }
    out
}
