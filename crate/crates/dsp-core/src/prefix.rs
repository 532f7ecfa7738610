//! Prefix sums over an embedding sequence, giving O(d) chunk means.

use crate::error::{Error, Result};
use crate::types::EmbeddingSequence;

/// (n+1) x d cumulative row sums; row i is the column-wise sum of the
/// first i rows of the source sequence, row 0 is the zero vector.
#[derive(Debug, Clone)]
pub struct PrefixSums {
    cumulative: Vec<f64>,
    n: usize,
    d: usize,
}

impl PrefixSums {
    pub fn build(seq: &EmbeddingSequence) -> Self {
        let (n, d) = (seq.n(), seq.d());
        let mut cumulative = vec![0.0; (n + 1) * d];
        for (i, row) in seq.rows().enumerate() {
            let (prev, curr) = cumulative[i * d..(i + 2) * d].split_at_mut(d);
            for c in 0..d {
                curr[c] = prev[c] + row[c];
            }
        }
        Self { cumulative, n, d }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Cumulative row i, 0 <= i <= n.
    pub fn cumulative_row(&self, i: usize) -> &[f64] {
        &self.cumulative[i * self.d..(i + 1) * self.d]
    }

    /// Mean of source rows [i, j), 1-based half-open, in O(d).
    pub fn chunk_mean(&self, i: usize, j: usize) -> Result<Vec<f64>> {
        if i >= j {
            return Err(Error::EmptyRange { i, j });
        }
        if i < 1 || j > self.n + 1 {
            return Err(Error::RangeOutOfBounds { i, j, n: self.n });
        }
        let mut out = vec![0.0; self.d];
        self.mean_into(i - 1, j - 1, &mut out);
        Ok(out)
    }

    /// Mean of rows [start, end), 0-based half-open. Caller guarantees
    /// `start < end <= n` and `out.len() == d`.
    pub(crate) fn mean_into(&self, start: usize, end: usize, out: &mut [f64]) {
        let len = (end - start) as f64;
        let lo = self.cumulative_row(start);
        let hi = self.cumulative_row(end);
        for c in 0..self.d {
            out[c] = (hi[c] - lo[c]) / len;
        }
    }

    /// Euclidean distance between the mean of rows [start, end) (0-based
    /// half-open) and `token`, without materializing the mean.
    #[inline]
    pub(crate) fn dist_mean_to(&self, start: usize, end: usize, token: &[f64]) -> f64 {
        let len = (end - start) as f64;
        let lo = &self.cumulative[start * self.d..start * self.d + self.d];
        let hi = &self.cumulative[end * self.d..end * self.d + self.d];
        let mut acc = 0.0;
        for c in 0..self.d {
            let diff = (hi[c] - lo[c]) / len - token[c];
            acc += diff * diff;
        }
        acc.sqrt()
    }
}
