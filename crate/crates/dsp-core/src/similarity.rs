//! Row-wise cosine similarity matrices for alignment visualisation.

use crate::error::{Error, Result};
use crate::types::EmbeddingSequence;

/// Dense rows x cols similarity matrix between two sequences, plus the
/// indices of zero-norm rows on either side (their similarities are
/// emitted as 0, cosine being undefined there).
#[derive(Debug, Clone)]
pub struct CosineMatrix {
    pub values: Vec<f64>,
    pub rows: usize,
    pub cols: usize,
    pub zero_rows_left: Vec<usize>,
    pub zero_rows_right: Vec<usize>,
}

impl CosineMatrix {
    pub fn at(&self, r: usize, c: usize) -> f64 {
        self.values[r * self.cols + c]
    }
}

fn row_norms(seq: &EmbeddingSequence) -> (Vec<f64>, Vec<usize>) {
    let mut norms = Vec::with_capacity(seq.n());
    let mut zeros = Vec::new();
    for (i, row) in seq.rows().enumerate() {
        let norm = row.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            zeros.push(i);
        }
        norms.push(norm);
    }
    (norms, zeros)
}

/// cos(left.row(r), right.row(c)) for every row pair.
pub fn cosine_matrix(
    left: &EmbeddingSequence,
    right: &EmbeddingSequence,
) -> Result<CosineMatrix> {
    if left.d() != right.d() {
        return Err(Error::DimensionMismatch {
            left: left.d(),
            right: right.d(),
        });
    }
    let (lnorms, lzeros) = row_norms(left);
    let (rnorms, rzeros) = row_norms(right);
    let (rows, cols) = (left.n(), right.n());
    let mut values = vec![0.0; rows * cols];
    for r in 0..rows {
        if lnorms[r] == 0.0 {
            continue;
        }
        let lrow = left.row(r);
        for c in 0..cols {
            if rnorms[c] == 0.0 {
                continue;
            }
            let dot: f64 = lrow.iter().zip(right.row(c)).map(|(a, b)| a * b).sum();
            values[r * cols + c] = dot / (lnorms[r] * rnorms[c]);
        }
    }
    Ok(CosineMatrix {
        values,
        rows,
        cols,
        zero_rows_left: lzeros,
        zero_rows_right: rzeros,
    })
}
