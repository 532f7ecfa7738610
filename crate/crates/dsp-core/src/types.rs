//! Core domain types: embedding sequences, partition boundaries, labeled pairs.
//!
//! Sequences store 64-bit floats row-major and are immutable after
//! construction. Row indices are 0-based in Rust APIs; partition cut
//! indices follow the 1-based half-open convention (chunk k covers rows
//! `[cuts[k-1], cuts[k])`, `cuts[0] = 1`, `cuts[m] = n+1`) wherever they
//! cross a public or serialized surface.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An n x d matrix of real-valued embeddings, one row per sequence index.
///
/// Invariants enforced at construction: `n >= 1`, `d >= 1`, every entry
/// finite. NaN and infinity are rejected here rather than propagated,
/// because min-reductions over NaN are order-dependent.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingSequence {
    data: Vec<f64>,
    n: usize,
    d: usize,
}

impl EmbeddingSequence {
    pub fn new(data: Vec<f64>, n: usize, d: usize) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::EmptySequence { n, d });
        }
        if data.len() != n * d {
            return Err(Error::ShapeMismatch {
                len: data.len(),
                n,
                d,
            });
        }
        for (idx, v) in data.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFiniteEntry {
                    row: idx / d,
                    col: idx % d,
                });
            }
        }
        Ok(Self { data, n, d })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptySequence { n: 0, d: 0 });
        }
        let d = rows[0].len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != d {
                return Err(Error::RaggedRow {
                    row: i,
                    got: row.len(),
                    expected: d,
                });
            }
        }
        let mut data = Vec::with_capacity(n * d);
        for row in rows {
            data.extend_from_slice(row);
        }
        Self::new(data, n, d)
    }

    /// Sequence length (number of rows).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Embedding dimension (number of columns).
    pub fn d(&self) -> usize {
        self.d
    }

    /// Row `i`, 0-based.
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.d..(i + 1) * self.d]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.d)
    }

    /// Row-major backing data.
    pub fn data(&self) -> &[f64] {
        &self.data
    }
}

/// The m+1 strictly increasing cut indices defining m contiguous,
/// nonempty chunks of a length-n sequence. 1-based: `cuts[0] = 1`,
/// `cuts[m] = n+1`, chunk k (1-based) covers indices `[cuts[k-1], cuts[k])`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PartitionBoundaries {
    cuts: Vec<usize>,
}

impl PartitionBoundaries {
    pub fn new(cuts: Vec<usize>, n: usize) -> Result<Self> {
        if cuts.len() < 2 {
            return Err(Error::InvalidBoundaries {
                reason: format!("need at least 2 cuts, got {}", cuts.len()),
            });
        }
        if cuts[0] != 1 {
            return Err(Error::InvalidBoundaries {
                reason: format!("first cut must be 1, got {}", cuts[0]),
            });
        }
        if *cuts.last().unwrap() != n + 1 {
            return Err(Error::InvalidBoundaries {
                reason: format!(
                    "last cut must be n+1 = {}, got {}",
                    n + 1,
                    cuts.last().unwrap()
                ),
            });
        }
        if let Some(w) = cuts.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidBoundaries {
                reason: format!("cuts must be strictly increasing, got {} then {}", w[0], w[1]),
            });
        }
        Ok(Self { cuts })
    }

    /// Builds cuts from consecutive chunk sizes (all nonzero).
    pub fn from_chunk_sizes(sizes: &[usize]) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::InvalidBoundaries {
                reason: "chunk sizes must be nonempty and nonzero".to_string(),
            });
        }
        let mut cuts = Vec::with_capacity(sizes.len() + 1);
        let mut acc = 1usize;
        cuts.push(acc);
        for &s in sizes {
            acc += s;
            cuts.push(acc);
        }
        let n = acc - 1;
        Self::new(cuts, n)
    }

    /// The 1-based cut indices, `m+1` of them.
    pub fn cuts(&self) -> &[usize] {
        &self.cuts
    }

    pub fn num_chunks(&self) -> usize {
        self.cuts.len() - 1
    }

    /// Length of the partitioned sequence.
    pub fn sequence_len(&self) -> usize {
        self.cuts.last().unwrap() - 1
    }

    /// 0-based half-open row range of chunk `k` (0-based chunk index).
    pub fn chunk_range(&self, k: usize) -> (usize, usize) {
        (self.cuts[k] - 1, self.cuts[k + 1] - 1)
    }
}

/// Binary match label: 1 when the audio content matches the text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Label {
    Negative,
    Positive,
}

impl Label {
    pub fn from_int(value: u64) -> Result<Self> {
        match value {
            0 => Ok(Label::Negative),
            1 => Ok(Label::Positive),
            _ => Err(Error::InvalidLabel { value }),
        }
    }

    pub fn is_positive(self) -> bool {
        matches!(self, Label::Positive)
    }
}

impl TryFrom<u8> for Label {
    type Error = Error;

    fn try_from(value: u8) -> Result<Self> {
        Label::from_int(u64::from(value))
    }
}

impl From<Label> for u8 {
    fn from(label: Label) -> u8 {
        match label {
            Label::Negative => 0,
            Label::Positive => 1,
        }
    }
}

/// An (audio, text, label) example. Both sequences share the embedding
/// dimension; the audio is the long side, the text the short side.
#[derive(Debug, Clone)]
pub struct LabeledPair {
    pub audio: EmbeddingSequence,
    pub text: EmbeddingSequence,
    pub label: Label,
}

impl LabeledPair {
    pub fn new(audio: EmbeddingSequence, text: EmbeddingSequence, label: Label) -> Result<Self> {
        if audio.d() != text.d() {
            return Err(Error::DimensionMismatch {
                left: audio.d(),
                right: text.d(),
            });
        }
        Ok(Self { audio, text, label })
    }
}

/// Result of aligning one audio sequence against one text sequence:
/// the partition cost, the cuts achieving it, and the per-chunk means.
#[derive(Debug, Clone)]
pub struct AlignmentOutcome {
    /// Average per-chunk Euclidean distance under `boundaries`.
    pub cost: f64,
    pub boundaries: PartitionBoundaries,
    /// m x d matrix; row k is the mean of the audio rows in chunk k.
    pub chunk_means: EmbeddingSequence,
}
