//! Contrastive hinge loss over alignment distances.
//!
//! Positives pay for distance above `m_pos`, negatives for distance
//! below `m_neg`:
//!
//! ```text
//! L(z, 1) = max(z - m_pos, 0)
//! L(z, 0) = max(m_neg - z, 0)
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::types::Label;

/// Hinge margins.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LossConfig {
    pub m_pos: f64,
    pub m_neg: f64,
}

impl LossConfig {
    pub const DEFAULT_M_POS: f64 = 0.2;
    pub const DEFAULT_M_NEG: f64 = 7.0;

    pub fn new(m_pos: f64, m_neg: f64) -> Result<Self> {
        if !(m_pos.is_finite() && m_neg.is_finite()) || m_pos < 0.0 || m_pos >= m_neg {
            return Err(Error::InvalidMargins { m_pos, m_neg });
        }
        Ok(Self { m_pos, m_neg })
    }
}

impl Default for LossConfig {
    fn default() -> Self {
        Self {
            m_pos: Self::DEFAULT_M_POS,
            m_neg: Self::DEFAULT_M_NEG,
        }
    }
}

/// Loss of a single example with alignment distance `z`.
pub fn contrastive_loss(z: f64, label: Label, cfg: &LossConfig) -> Result<f64> {
    if !z.is_finite() || z < 0.0 {
        return Err(Error::InvalidDistance { z });
    }
    Ok(match label {
        Label::Positive => (z - cfg.m_pos).max(0.0),
        Label::Negative => (cfg.m_neg - z).max(0.0),
    })
}

/// Mean per-example loss over a batch.
pub fn batch_loss(zs: &[f64], labels: &[Label], cfg: &LossConfig) -> Result<f64> {
    if zs.len() != labels.len() {
        return Err(Error::BatchLengthMismatch {
            zs: zs.len(),
            labels: labels.len(),
        });
    }
    if zs.is_empty() {
        return Err(Error::EmptyBatch);
    }
    let mut total = 0.0;
    for (&z, &label) in zs.iter().zip(labels) {
        total += contrastive_loss(z, label, cfg)?;
    }
    Ok(total / zs.len() as f64)
}
