//! Shared plumbing for output artifacts: the tool stamp that goes into every
//! file, atomic writes, and the JSON wrappers stored next to the data.

use serde::{Deserialize, Serialize};
use std::fs;
use std::io::Write as _;
use std::path::Path;

pub type BoxError = Box<dyn std::error::Error + Send + Sync>;

/// Name and version of this binary, embedded in every artifact.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

impl ToolInfo {
    pub fn current() -> ToolInfo {
        ToolInfo {
            name: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    /// One-line form for text headers: "holdem-pid 0.1.0".
    pub fn stamp() -> String {
        concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION")).to_string()
    }
}

/// Writes through a temp file in the destination directory and renames it
/// into place, so readers never observe a partially written artifact.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), BoxError> {
    let dir = match path.parent() {
        Some(parent) if !parent.as_os_str().is_empty() => parent,
        _ => Path::new("."),
    };
    fs::create_dir_all(dir).map_err(|err| format!("cannot create {}: {err}", dir.display()))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .map_err(|err| format!("cannot stage a file in {}: {err}", dir.display()))?;
    tmp.write_all(bytes)
        .map_err(|err| format!("cannot write {}: {err}", path.display()))?;
    tmp.persist(path)
        .map_err(|err| format!("cannot write {}: {}", path.display(), err.error))?;
    Ok(())
}

pub fn to_pretty_json<T: Serialize>(value: &T) -> Result<String, BoxError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}
