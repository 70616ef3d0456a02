use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use chrono::{SecondsFormat, Utc};
use serde::Serialize;
use serde_json::Value;

use crate::CliError;

#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: Value,
    pub seed: u64,
    pub tool_version: String,
    pub timestamp: String,
}

impl RunManifest {
    pub fn new(command: &str, parameters: Value, seed: u64) -> Self {
        Self {
            command: command.to_string(),
            parameters,
            seed,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: Utc::now().to_rfc3339_opts(SecondsFormat::Secs, true),
        }
    }
}

/// `results/scan.csv` → `results/scan.manifest.json`.
pub fn manifest_path(out: &Path) -> PathBuf {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "output".into());
    out.with_file_name(format!("{stem}.manifest.json"))
}

/// Writes the data to `out` (or stdout) and the manifest next to it (or to stderr).
pub fn emit(data: &str, out: Option<&Path>, manifest: &RunManifest) -> Result<(), CliError> {
    let manifest_json = serde_json::to_string_pretty(manifest).expect("manifest serializes");
    match out {
        Some(path) => {
            fs::write(path, data).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            let mpath = manifest_path(path);
            fs::write(&mpath, manifest_json + "\n")
                .map_err(|e| CliError::Io(format!("{}: {e}", mpath.display())))?;
        }
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(data.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Io(e.to_string()))?;
            eprintln!("manifest: {}", serde_json::to_string(manifest).expect("manifest serializes"));
        }
    }
    Ok(())
}

/// CSV text with LF line endings and a header row.
pub fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut s = header.join(",");
    s.push('\n');
    for r in rows {
        s.push_str(&r.join(","));
        s.push('\n');
    }
    s
}

pub fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("value serializes");
    s.push('\n');
    s
}
