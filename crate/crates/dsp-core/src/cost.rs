//! Partition cost: average per-chunk Euclidean distance to the text tokens.
//!
//! Chunk means here are computed by direct row summation, independent of
//! the prefix-sum path the aligner uses, so the two routes cross-check
//! each other in tests.

use crate::error::{Error, Result};
use crate::types::{EmbeddingSequence, PartitionBoundaries};

/// Unsquared Euclidean distance. Squared L2 would change which partition
/// is optimal, so it is not offered.
#[inline]
pub fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = 0.0;
    for (x, y) in a.iter().zip(b) {
        let diff = x - y;
        acc += diff * diff;
    }
    acc.sqrt()
}

/// Per-chunk means of `audio` under `p`, by direct summation: an
/// m x d matrix with row k the mean of the audio rows in chunk k.
pub fn chunk_means(
    audio: &EmbeddingSequence,
    p: &PartitionBoundaries,
) -> Result<EmbeddingSequence> {
    check_boundaries(audio, p)?;
    let d = audio.d();
    let m = p.num_chunks();
    let mut data = vec![0.0; m * d];
    for k in 0..m {
        let (start, end) = p.chunk_range(k);
        let out = &mut data[k * d..(k + 1) * d];
        for i in start..end {
            for (o, v) in out.iter_mut().zip(audio.row(i)) {
                *o += v;
            }
        }
        let len = (end - start) as f64;
        for o in out.iter_mut() {
            *o /= len;
        }
    }
    EmbeddingSequence::new(data, m, d)
}

/// Average pairwise distance between the chunk means of `audio` under
/// `p` and the rows of `text`: `(1/m) * sum_k ||mean(chunk_k) - t_k||`.
pub fn cost_of_partition(
    audio: &EmbeddingSequence,
    text: &EmbeddingSequence,
    p: &PartitionBoundaries,
) -> Result<f64> {
    if audio.d() != text.d() {
        return Err(Error::DimensionMismatch {
            left: audio.d(),
            right: text.d(),
        });
    }
    if p.num_chunks() != text.n() {
        return Err(Error::ChunkCountMismatch {
            chunks: p.num_chunks(),
            tokens: text.n(),
        });
    }
    let means = chunk_means(audio, p)?;
    let m = text.n();
    let mut total = 0.0;
    for k in 0..m {
        total += euclidean(means.row(k), text.row(k));
    }
    Ok(total / m as f64)
}

fn check_boundaries(audio: &EmbeddingSequence, p: &PartitionBoundaries) -> Result<()> {
    if p.sequence_len() != audio.n() {
        return Err(Error::InvalidBoundaries {
            reason: format!(
                "boundaries cover {} rows but sequence has {}",
                p.sequence_len(),
                audio.n()
            ),
        });
    }
    Ok(())
}
