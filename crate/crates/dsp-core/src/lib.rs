//! Monotonic alignment of a long embedding sequence against a short
//! one by optimal contiguous partitioning.
//!
//! Given an audio-side sequence of n frame embeddings and a text-side
//! sequence of m token embeddings (n >= m, same dimension), the aligner
//! splits the audio into m contiguous nonempty chunks, represents each
//! chunk by its mean, and scores the pair by the average Euclidean
//! distance between chunk means and tokens. [`align::dsp_align`] finds
//! the partition minimizing that score by dynamic programming in
//! O(m n^2 d); [`align::brute_force_align`] is the exhaustive oracle,
//! and equal/random baselines cover the same interface for comparisons.
//!
//! Around the aligner: a contrastive hinge [`loss`], ROC [`metrics`]
//! (AUC and equal error rate over scored pairs), a deterministic
//! [`synth`] generator of word-structured pairs for end-to-end checks,
//! and the [`formats`] the CLI speaks.

pub mod align;
pub mod cost;
pub mod error;
pub mod formats;
pub mod loss;
pub mod metrics;
pub mod prefix;
pub mod rng;
pub mod similarity;
pub mod synth;
pub mod types;

pub use align::{
    align_with_scheme, brute_force_align, brute_force_align_with_cap, dsp_align, dsp_cost,
    equal_partition, random_partition, DpTable, Scheme, DEFAULT_ENUMERATION_CAP,
};
pub use cost::{chunk_means, cost_of_partition, euclidean};
pub use error::{Error, Result};
pub use loss::{batch_loss, contrastive_loss, LossConfig};
pub use metrics::{auc, eer, evaluate, EvalReport, ScoredPair};
pub use prefix::PrefixSums;
pub use synth::{generate_corpus, generate_episode, Episode, SynthConfig};
pub use types::{AlignmentOutcome, EmbeddingSequence, Label, LabeledPair, PartitionBoundaries};
