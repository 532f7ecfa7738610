//! On-disk interchange formats: embedding matrices (binary and CSV),
//! JSON-lines manifests and score records, JSON eval reports.
//!
//! All parsers take untrusted input and must fail cleanly, never panic;
//! they are fuzzed from `fuzz/fuzz_targets/`.

mod binary;
mod csv;
mod records;

pub use binary::{read_embedding_binary, write_embedding_binary, MAGIC};
pub use csv::{read_embedding_csv, write_embedding_csv};
pub use records::{
    parse_manifest, parse_score_records, write_manifest, write_score_records, ManifestRecord,
    ScoreRecord,
};

use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::types::EmbeddingSequence;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("bad magic: expected {:?}, got {found:?}", MAGIC)]
    BadMagic { found: [u8; 4] },

    #[error("header truncated: need 12 bytes, got {got}")]
    HeaderTruncated { got: usize },

    #[error("header declares n={n}, d={d} ({expected} payload bytes) but payload has {got}")]
    PayloadSizeMismatch { n: u32, d: u32, expected: u128, got: usize },

    #[error("header declares an empty matrix (n={n}, d={d})")]
    EmptyMatrix { n: u32, d: u32 },

    #[error("non-finite value at row {row}, column {col}")]
    NonFinite { row: usize, col: usize },

    #[error("value at row {row}, column {col} does not fit in binary32")]
    Binary32Range { row: usize, col: usize },

    #[error("line {line}: {message}")]
    Csv { line: usize, message: String },

    #[error("line {line}: {source}")]
    Json {
        line: usize,
        source: serde_json::Error,
    },

    #[error("line {line}: duplicate id {id:?}")]
    DuplicateId { line: usize, id: String },

    #[error("line {line}: {message}")]
    InvalidRecord { line: usize, message: String },

    #[error("file has no records")]
    Empty,

    #[error(transparent)]
    Domain(#[from] crate::error::Error),
}

/// Loads an embedding file, sniffing the format: files starting with
/// the `EMB1` magic are binary, anything else is parsed as CSV.
pub fn load_embedding_file(path: &Path) -> Result<EmbeddingSequence, FormatError> {
    let bytes = fs::read(path)?;
    if bytes.len() >= 4 && bytes[0..4] == MAGIC {
        read_embedding_binary(&bytes)
    } else {
        let text = String::from_utf8(bytes).map_err(|e| FormatError::Csv {
            line: 0,
            message: format!("not valid UTF-8: {e}"),
        })?;
        read_embedding_csv(&text)
    }
}

pub fn save_embedding_binary(path: &Path, seq: &EmbeddingSequence) -> Result<(), FormatError> {
    fs::write(path, write_embedding_binary(seq)?)?;
    Ok(())
}
