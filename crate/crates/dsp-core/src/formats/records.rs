//! JSON-lines record formats: manifests of labeled pairs and per-pair
//! score records.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::formats::FormatError;
use crate::types::Label;

/// One manifest line: where to find a pair's embeddings and its label.
/// Relative paths are resolved against the manifest's directory.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestRecord {
    pub id: String,
    pub audio_path: String,
    pub text_path: String,
    pub label: Label,
}

/// One score line produced by the align command. Boundaries are the
/// 1-based cuts of the partition that produced `cost`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreRecord {
    pub id: String,
    pub cost: f64,
    pub boundaries: Vec<usize>,
    pub label: Label,
    pub scheme: String,
}

/// Parses a JSON-lines manifest, enforcing unique ids.
pub fn parse_manifest(text: &str) -> Result<Vec<ManifestRecord>, FormatError> {
    let mut records = Vec::new();
    let mut seen: HashSet<String> = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let record: ManifestRecord =
            serde_json::from_str(raw).map_err(|source| FormatError::Json { line, source })?;
        if !seen.insert(record.id.clone()) {
            return Err(FormatError::DuplicateId {
                line,
                id: record.id,
            });
        }
        records.push(record);
    }
    if records.is_empty() {
        return Err(FormatError::Empty);
    }
    Ok(records)
}

pub fn write_manifest(records: &[ManifestRecord]) -> String {
    let mut out = String::new();
    for record in records {
        out.push_str(&serde_json::to_string(record).expect("manifest records serialize"));
        out.push('\n');
    }
    out
}

/// Parses JSON-lines score records, checking that costs are finite and
/// nonnegative and that boundaries form a valid cut list.
pub fn parse_score_records(text: &str) -> Result<Vec<ScoreRecord>, FormatError> {
    let mut records = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let record: ScoreRecord =
            serde_json::from_str(raw).map_err(|source| FormatError::Json { line, source })?;
        if !record.cost.is_finite() || record.cost < 0.0 {
            return Err(FormatError::InvalidRecord {
                line,
                message: format!("cost must be finite and >= 0, got {}", record.cost),
            });
        }
        if record.boundaries.len() < 2 || record.boundaries[0] != 1 {
            return Err(FormatError::InvalidRecord {
                line,
                message: "boundaries must start at 1 and hold at least 2 cuts".to_string(),
            });
        }
        if record.boundaries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(FormatError::InvalidRecord {
                line,
                message: "boundaries must be strictly increasing".to_string(),
            });
        }
        records.push(record);
    }
    if records.is_empty() {
        return Err(FormatError::Empty);
    }
    Ok(records)
}

pub fn write_score_records(records: &[ScoreRecord]) -> String {
    let mut out = String::new();
    for record in records {
        out.push_str(&serde_json::to_string(record).expect("score records serialize"));
        out.push('\n');
    }
    out
}
