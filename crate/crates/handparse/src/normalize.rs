use crate::error::NormalizedError;
use crate::record::HandRecord;
use serde::{Deserialize, Serialize};
use std::io::{BufRead, Write};

pub const FORMAT_NAME: &str = "handrecords";
pub const FORMAT_VERSION: u32 = 1;

/// First line of a normalized file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalizedHeader {
    pub format: String,
    pub version: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tool_version: Option<String>,
}

impl NormalizedHeader {
    pub fn new() -> Self {
        NormalizedHeader {
            format: FORMAT_NAME.to_string(),
            version: FORMAT_VERSION,
            tool_version: None,
        }
    }

    pub fn with_tool_version(version: &str) -> Self {
        NormalizedHeader {
            tool_version: Some(version.to_string()),
            ..NormalizedHeader::new()
        }
    }
}

impl Default for NormalizedHeader {
    fn default() -> Self {
        NormalizedHeader::new()
    }
}

/// Writes the header line followed by one JSON object per hand. The encoding
/// is deterministic, so read-then-write reproduces a file byte for byte.
pub fn write_normalized<W: Write>(
    out: &mut W,
    header: &NormalizedHeader,
    records: &[HandRecord],
) -> Result<(), NormalizedError> {
    let line = serde_json::to_string(header)
        .map_err(|source| NormalizedError::Json { line: 1, source })?;
    writeln!(out, "{line}")?;
    for (i, record) in records.iter().enumerate() {
        let line = serde_json::to_string(record).map_err(|source| NormalizedError::Json {
            line: i + 2,
            source,
        })?;
        writeln!(out, "{line}")?;
    }
    Ok(())
}

/// Reads a normalized file, checking the header before any record.
pub fn read_normalized<R: BufRead>(
    input: R,
) -> Result<(NormalizedHeader, Vec<HandRecord>), NormalizedError> {
    let mut header: Option<NormalizedHeader> = None;
    let mut records = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line.map_err(NormalizedError::Io)?;
        if line.trim().is_empty() {
            continue;
        }
        let no = i + 1;
        if header.is_none() {
            let parsed: NormalizedHeader = serde_json::from_str(&line)
                .map_err(|source| NormalizedError::Json { line: no, source })?;
            if parsed.format != FORMAT_NAME {
                return Err(NormalizedError::SchemaMismatch {
                    line: no,
                    reason: format!("unknown format {:?}", parsed.format),
                });
            }
            if parsed.version != FORMAT_VERSION {
                return Err(NormalizedError::SchemaMismatch {
                    line: no,
                    reason: format!(
                        "version {} is not the supported {FORMAT_VERSION}",
                        parsed.version
                    ),
                });
            }
            header = Some(parsed);
            continue;
        }
        let record: HandRecord = serde_json::from_str(&line)
            .map_err(|source| NormalizedError::Json { line: no, source })?;
        records.push(record);
    }
    let header = header.ok_or_else(|| NormalizedError::SchemaMismatch {
        line: 1,
        reason: "empty input".to_string(),
    })?;
    Ok((header, records))
}
