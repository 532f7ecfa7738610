//! Dynamic-programming partition alignment, its exhaustive oracle, and
//! the equal/random baseline schemes.
//!
//! The DP divides audio rows `a_i..a_n` into `k` chunks matched against
//! the last `k` text tokens. With `D[k][i]` the optimal (unaveraged) sum
//! of chunk distances for that subproblem,
//!
//! ```text
//! D[1][i] = ||mean(a_{i:n+1}) - t_m||
//! D[k][i] = min_{i < j <= n-k+2} ( ||mean(a_{i:j}) - t_{m-k+1}|| + D[k-1][j] )
//! ```
//!
//! and the alignment cost is `D[m][1] / m`. Chunk means come from prefix
//! sums, so each candidate split costs O(d) and the whole table O(m n^2 d).
//! Argmin ties break toward the smallest split index, which makes the
//! backtracked cut list the lexicographically smallest optimum and keeps
//! it in agreement with the exhaustive oracle below.

use std::fmt;
use std::str::FromStr;

use crate::cost::{chunk_means, cost_of_partition};
use crate::error::{Error, Result};
use crate::prefix::PrefixSums;
use crate::rng;
use crate::types::{AlignmentOutcome, EmbeddingSequence, LabeledPair, PartitionBoundaries};

/// Largest number of partitions `brute_force_align` will enumerate.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

/// Partitioning scheme used to score a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    /// Optimal partition from the dynamic program.
    Dsp,
    /// Chunk sizes as equal as possible, remainder to the front.
    Equal,
    /// Uniformly random interior cuts from a seed.
    Random,
}

impl Scheme {
    pub fn name(self) -> &'static str {
        match self {
            Scheme::Dsp => "dsp",
            Scheme::Equal => "equal",
            Scheme::Random => "random",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "dsp" => Ok(Scheme::Dsp),
            "equal" => Ok(Scheme::Equal),
            "random" => Ok(Scheme::Random),
            other => Err(format!("unknown scheme {other:?}, expected dsp, equal or random")),
        }
    }
}

fn validate_alignable(audio: &EmbeddingSequence, text: &EmbeddingSequence) -> Result<()> {
    if audio.d() != text.d() {
        return Err(Error::DimensionMismatch {
            left: audio.d(),
            right: text.d(),
        });
    }
    if audio.n() < text.n() {
        return Err(Error::SequenceTooShort {
            n: audio.n(),
            m: text.n(),
        });
    }
    Ok(())
}

/// The filled DP table plus argmin choices for backtracking.
///
/// `value(k, i)` (both 1-based) is defined for `i <= n-k+1`; other cells
/// stay at infinity. Keeping the whole table costs O(mn) memory; the
/// cost-only rolling variant behind [`dsp_cost`] is O(n).
#[derive(Debug, Clone)]
pub struct DpTable {
    values: Vec<f64>,
    choice: Vec<usize>,
    n: usize,
    m: usize,
}

impl DpTable {
    pub fn build(audio: &EmbeddingSequence, text: &EmbeddingSequence) -> Result<Self> {
        validate_alignable(audio, text)?;
        let (n, m) = (audio.n(), text.n());
        let ps = PrefixSums::build(audio);

        let mut values = vec![f64::INFINITY; m * n];
        let mut choice = vec![usize::MAX; m * n];

        let last_token = text.row(m - 1);
        for (i, cell) in values[..n].iter_mut().enumerate() {
            *cell = ps.dist_mean_to(i, n, last_token);
        }

        // split indices j are positions, not iteration artifacts
        #[allow(clippy::needless_range_loop)]
        for k in 2..=m {
            let token = text.row(m - k);
            let (filled, rest) = values.split_at_mut((k - 1) * n);
            let prev = &filled[(k - 2) * n..];
            let curr = &mut rest[..n];
            let curr_choice = &mut choice[(k - 1) * n..k * n];
            for i in 0..=(n - k) {
                let mut best = f64::INFINITY;
                let mut best_j = usize::MAX;
                for j in (i + 1)..=(n - k + 1) {
                    let cand = ps.dist_mean_to(i, j, token) + prev[j];
                    if cand < best {
                        best = cand;
                        best_j = j;
                    }
                }
                curr[i] = best;
                curr_choice[i] = best_j;
            }
        }

        Ok(Self { values, choice, n, m })
    }

    /// Table entry `D[k][i]`, 1-based.
    pub fn value(&self, k: usize, i: usize) -> f64 {
        self.values[(k - 1) * self.n + (i - 1)]
    }

    /// Optimal alignment cost, `D[m][1] / m`.
    pub fn optimal_cost(&self) -> f64 {
        self.values[(self.m - 1) * self.n] / self.m as f64
    }

    /// Reconstructs the optimal cuts by following the argmin choices.
    pub fn backtrack(&self) -> PartitionBoundaries {
        let mut cuts = Vec::with_capacity(self.m + 1);
        cuts.push(1);
        let mut start = 0usize;
        for k in (2..=self.m).rev() {
            let split = self.choice[(k - 1) * self.n + start];
            cuts.push(split + 1);
            start = split;
        }
        cuts.push(self.n + 1);
        PartitionBoundaries::new(cuts, self.n).expect("backtracked cuts are valid")
    }
}

/// Optimal monotonic partition of `audio` into `text.n()` chunks,
/// minimizing the average per-chunk distance to the text tokens.
pub fn dsp_align(
    audio: &EmbeddingSequence,
    text: &EmbeddingSequence,
) -> Result<AlignmentOutcome> {
    let table = DpTable::build(audio, text)?;
    let boundaries = table.backtrack();
    let means = chunk_means(audio, &boundaries)?;
    Ok(AlignmentOutcome {
        cost: table.optimal_cost(),
        boundaries,
        chunk_means: means,
    })
}

/// Cost-only variant of [`dsp_align`] keeping two rolling DP rows
/// (O(n) space, no boundaries). Performs the identical arithmetic in
/// the identical order, so it agrees with the table variant exactly.
pub fn dsp_cost(audio: &EmbeddingSequence, text: &EmbeddingSequence) -> Result<f64> {
    validate_alignable(audio, text)?;
    let (n, m) = (audio.n(), text.n());
    let ps = PrefixSums::build(audio);

    let last_token = text.row(m - 1);
    let mut prev: Vec<f64> = (0..n).map(|i| ps.dist_mean_to(i, n, last_token)).collect();
    let mut curr = vec![f64::INFINITY; n];

    #[allow(clippy::needless_range_loop)]
    for k in 2..=m {
        let token = text.row(m - k);
        for i in 0..=(n - k) {
            let mut best = f64::INFINITY;
            for j in (i + 1)..=(n - k + 1) {
                let cand = ps.dist_mean_to(i, j, token) + prev[j];
                if cand < best {
                    best = cand;
                }
            }
            curr[i] = best;
        }
        std::mem::swap(&mut prev, &mut curr);
    }

    Ok(prev[0] / m as f64)
}

/// C(a, b), saturating to `u128::MAX` on overflow.
fn binomial(a: usize, b: usize) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = match acc.checked_mul((a - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Advances `interior` (ascending values in {2..n}) to the next cut
/// list in lexicographic order; false once exhausted.
fn advance_interior(interior: &mut [usize], n: usize) -> bool {
    let m1 = interior.len();
    for t in (0..m1).rev() {
        let max_here = n - (m1 - 1 - t);
        if interior[t] < max_here {
            interior[t] += 1;
            for u in t + 1..m1 {
                interior[u] = interior[u - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Exhaustive minimum over every partition, used as the oracle for
/// [`dsp_align`]. Enumerates all C(n-1, m-1) interior cut lists in
/// lexicographic order and keeps the first strict minimum, so ties
/// resolve to the lexicographically smallest cut list.
pub fn brute_force_align(
    audio: &EmbeddingSequence,
    text: &EmbeddingSequence,
) -> Result<AlignmentOutcome> {
    brute_force_align_with_cap(audio, text, DEFAULT_ENUMERATION_CAP)
}

pub fn brute_force_align_with_cap(
    audio: &EmbeddingSequence,
    text: &EmbeddingSequence,
    cap: u64,
) -> Result<AlignmentOutcome> {
    validate_alignable(audio, text)?;
    let (n, m) = (audio.n(), text.n());
    let combinations = binomial(n - 1, m - 1);
    if combinations > u128::from(cap) {
        return Err(Error::EnumerationCapExceeded { combinations, cap });
    }

    let mut interior: Vec<usize> = (2..m + 1).collect();
    let mut best_cost = f64::INFINITY;
    let mut best: Option<PartitionBoundaries> = None;
    loop {
        let mut cuts = Vec::with_capacity(m + 1);
        cuts.push(1);
        cuts.extend_from_slice(&interior);
        cuts.push(n + 1);
        let p = PartitionBoundaries::new(cuts, n).expect("enumerated cuts are valid");
        let cost = cost_of_partition(audio, text, &p)?;
        if cost < best_cost {
            best_cost = cost;
            best = Some(p);
        }
        if !advance_interior(&mut interior, n) {
            break;
        }
    }

    let boundaries = best.expect("at least one partition exists when n >= m");
    let means = chunk_means(audio, &boundaries)?;
    Ok(AlignmentOutcome {
        cost: best_cost,
        boundaries,
        chunk_means: means,
    })
}

/// Chunk sizes differing by at most one; with `r = n mod m` the first
/// `r` chunks get the extra row.
pub fn equal_partition(n: usize, m: usize) -> Result<PartitionBoundaries> {
    if m == 0 || n < m {
        return Err(Error::SequenceTooShort { n, m });
    }
    let q = n / m;
    let r = n % m;
    let sizes: Vec<usize> = (0..m).map(|k| if k < r { q + 1 } else { q }).collect();
    PartitionBoundaries::from_chunk_sizes(&sizes)
}

/// Interior cuts drawn uniformly without replacement from {2..n}.
/// Identical seeds give identical cuts.
pub fn random_partition(n: usize, m: usize, seed: u64) -> Result<PartitionBoundaries> {
    if m == 0 || n < m {
        return Err(Error::SequenceTooShort { n, m });
    }
    let mut cuts = Vec::with_capacity(m + 1);
    cuts.push(1);
    if m > 1 {
        let mut rng = rng::rng_from_seed(seed);
        let mut pool: Vec<usize> = (2..=n).collect();
        let mut interior = rng::sample_distinct(&mut rng, &mut pool, m - 1);
        interior.sort_unstable();
        cuts.extend(interior);
    }
    cuts.push(n + 1);
    PartitionBoundaries::new(cuts, n)
}

/// Scores one pair under the chosen scheme. The seed only matters for
/// [`Scheme::Random`]. Every outcome carries the per-chunk means.
pub fn align_with_scheme(
    pair: &LabeledPair,
    scheme: Scheme,
    seed: u64,
) -> Result<AlignmentOutcome> {
    match scheme {
        Scheme::Dsp => dsp_align(&pair.audio, &pair.text),
        Scheme::Equal => {
            let p = equal_partition(pair.audio.n(), pair.text.n())?;
            fixed_partition_outcome(pair, p)
        }
        Scheme::Random => {
            let p = random_partition(pair.audio.n(), pair.text.n(), seed)?;
            fixed_partition_outcome(pair, p)
        }
    }
}

fn fixed_partition_outcome(
    pair: &LabeledPair,
    p: PartitionBoundaries,
) -> Result<AlignmentOutcome> {
    let cost = cost_of_partition(&pair.audio, &pair.text, &p)?;
    let means = chunk_means(&pair.audio, &p)?;
    Ok(AlignmentOutcome {
        cost,
        boundaries: p,
        chunk_means: means,
    })
}
