//! ROC evaluation over scored pairs: AUC and equal error rate.
//!
//! Costs are distances, so the decision convention is "classify
//! positive when cost <= threshold". AUC is the Mann-Whitney statistic
//! (probability a random positive costs less than a random negative,
//! ties at half credit), computed from average ranks in O(n log n).
//! EER sweeps the observed costs as thresholds and linearly
//! interpolates between adjacent ones when no exact FPR = FNR crossing
//! exists.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::types::Label;

/// One scored pair: alignment cost plus ground-truth label.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoredPair {
    pub id: String,
    pub cost: f64,
    pub label: Label,
}

impl ScoredPair {
    pub fn new(id: impl Into<String>, cost: f64, label: Label) -> Self {
        Self {
            id: id.into(),
            cost,
            label,
        }
    }
}

/// Evaluation summary over a score set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub auc: f64,
    pub eer: f64,
    /// Cost value at the FPR = FNR crossing.
    pub eer_threshold: f64,
    pub n_pos: usize,
    pub n_neg: usize,
}

fn validate(pairs: &[ScoredPair]) -> Result<(usize, usize)> {
    let mut n_pos = 0;
    let mut n_neg = 0;
    for p in pairs {
        if !p.cost.is_finite() {
            return Err(Error::NonFiniteCost { id: p.id.clone() });
        }
        match p.label {
            Label::Positive => n_pos += 1,
            Label::Negative => n_neg += 1,
        }
    }
    if n_pos == 0 || n_neg == 0 {
        return Err(Error::SingleClass { n_pos, n_neg });
    }
    Ok((n_pos, n_neg))
}

/// Mann-Whitney AUC with half-credit ties.
pub fn auc(pairs: &[ScoredPair]) -> Result<f64> {
    let (n_pos, n_neg) = validate(pairs)?;

    let mut order: Vec<usize> = (0..pairs.len()).collect();
    order.sort_by(|&a, &b| pairs[a].cost.total_cmp(&pairs[b].cost));

    // average ranks within tie groups, ranks 1-based ascending in cost
    let mut rank_sum_pos = 0.0;
    let mut idx = 0;
    while idx < order.len() {
        let mut end = idx + 1;
        while end < order.len() && pairs[order[end]].cost == pairs[order[idx]].cost {
            end += 1;
        }
        let avg_rank = (idx + 1 + end) as f64 / 2.0; // mean of ranks idx+1 ..= end
        for &orig in &order[idx..end] {
            if pairs[orig].label.is_positive() {
                rank_sum_pos += avg_rank;
            }
        }
        idx = end;
    }

    let p = n_pos as f64;
    let n = n_neg as f64;
    // pairs with pos cost above neg cost (+ half the ties)
    let discordant = rank_sum_pos - p * (p + 1.0) / 2.0;
    Ok(1.0 - discordant / (p * n))
}

/// Equal error rate and its threshold.
///
/// Returns `(eer, threshold)` where `eer` is the common FPR = FNR value
/// at the crossing. When the crossing falls between two observed
/// thresholds, both the rate and the threshold are linearly
/// interpolated; when it falls inside the jump at the smallest observed
/// cost, that cost is reported as the threshold.
pub fn eer(pairs: &[ScoredPair]) -> Result<(f64, f64)> {
    let (n_pos, n_neg) = validate(pairs)?;
    let p = n_pos as f64;
    let n = n_neg as f64;

    let mut sorted: Vec<(f64, Label)> = pairs.iter().map(|s| (s.cost, s.label)).collect();
    sorted.sort_by(|a, b| a.0.total_cmp(&b.0));

    // unique thresholds with cumulative class counts at cost <= threshold
    let mut thresholds: Vec<(f64, f64, f64)> = Vec::new(); // (theta, fpr, fnr)
    let mut cum_pos = 0usize;
    let mut cum_neg = 0usize;
    let mut idx = 0;
    while idx < sorted.len() {
        let theta = sorted[idx].0;
        while idx < sorted.len() && sorted[idx].0 == theta {
            match sorted[idx].1 {
                Label::Positive => cum_pos += 1,
                Label::Negative => cum_neg += 1,
            }
            idx += 1;
        }
        let fpr = cum_neg as f64 / n;
        let fnr = 1.0 - cum_pos as f64 / p;
        thresholds.push((theta, fpr, fnr));
    }

    // virtual starting point below every cost: nothing accepted
    let mut prev = (thresholds[0].0, 0.0f64, 1.0f64);
    for &(theta, fpr, fnr) in &thresholds {
        let diff = fnr - fpr;
        if diff <= 0.0 {
            if diff == 0.0 {
                return Ok((fpr, theta));
            }
            let prev_diff = prev.2 - prev.1;
            // prev_diff > 0 here: the crossing is inside this step
            let lambda = prev_diff / (prev_diff - diff);
            let fpr_star = prev.1 + lambda * (fpr - prev.1);
            let fnr_star = prev.2 + lambda * (fnr - prev.2);
            let theta_star = prev.0 + lambda * (theta - prev.0);
            return Ok(((fpr_star + fnr_star) / 2.0, theta_star));
        }
        prev = (theta, fpr, fnr);
    }

    // at the largest cost FPR = 1 and FNR = 0, so diff <= 0 always hits
    unreachable!("FNR - FPR reaches -1 at the largest threshold")
}

/// AUC, EER, and the EER threshold in one report.
pub fn evaluate(pairs: &[ScoredPair]) -> Result<EvalReport> {
    let (n_pos, n_neg) = validate(pairs)?;
    let auc = auc(pairs)?;
    let (eer_value, threshold) = eer(pairs)?;
    Ok(EvalReport {
        auc,
        eer: eer_value,
        eer_threshold: threshold,
        n_pos,
        n_neg,
    })
}
