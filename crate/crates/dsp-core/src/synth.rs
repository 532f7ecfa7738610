//! Deterministic synthetic audio/text embedding pairs with word
//! structure.
//!
//! Each episode draws a vocabulary of unit-norm prototype vectors, picks
//! a phrase of distinct words as the text sequence, and synthesizes
//! audio by repeating each word's prototype for a random duration and
//! adding Gaussian noise. Negatives keep the text but speak a perturbed
//! phrase: hard negatives swap exactly one word for its nearest
//! neighbour in the vocabulary, easy negatives resample the whole
//! phrase from disjoint words.
//!
//! Episodes are pure functions of `(config, episode_index)`; the draw
//! order (vocabulary, phrase, then per pair durations before noise) is
//! part of the reproducibility contract.

use rand_chacha::ChaCha8Rng;

use crate::cost::euclidean;
use crate::error::{Error, Result};
use crate::rng::{derive_seed, fill_standard_normal, gen_index, rng_from_seed, sample_distinct};
use crate::types::{EmbeddingSequence, Label, LabeledPair, PartitionBoundaries};

pub const POSITIVES_PER_EPISODE: usize = 3;
pub const NEGATIVES_PER_EPISODE: usize = 3;

/// Generator parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct SynthConfig {
    pub vocab_size: usize,
    /// Embedding dimension of prototypes, audio and text.
    pub dim: usize,
    /// Words per phrase, 1 to 4.
    pub phrase_len: usize,
    /// Frames per word, inclusive range.
    pub dur_min: usize,
    pub dur_max: usize,
    /// Per-entry Gaussian noise scale on audio frames.
    pub noise_sigma: f64,
    /// Hard negatives swap one word for its nearest neighbour; easy
    /// negatives resample the phrase from disjoint vocabulary.
    pub hard_negative: bool,
    pub seed: u64,
}

impl Default for SynthConfig {
    fn default() -> Self {
        Self {
            vocab_size: 16,
            dim: 16,
            phrase_len: 3,
            dur_min: 3,
            dur_max: 10,
            noise_sigma: 0.1,
            hard_negative: true,
            seed: 0,
        }
    }
}

impl SynthConfig {
    pub fn validate(&self) -> Result<()> {
        let fail = |reason: String| Err(Error::InvalidConfig { reason });
        if self.dim == 0 {
            return fail("dim must be at least 1".into());
        }
        if !(1..=4).contains(&self.phrase_len) {
            return fail(format!("phrase_len must be in [1, 4], got {}", self.phrase_len));
        }
        if self.vocab_size < 2 * self.phrase_len {
            return fail(format!(
                "vocab_size must be at least 2 * phrase_len = {}, got {}",
                2 * self.phrase_len,
                self.vocab_size
            ));
        }
        if self.dur_min == 0 || self.dur_min > self.dur_max {
            return fail(format!(
                "durations must satisfy 1 <= dur_min <= dur_max, got [{}, {}]",
                self.dur_min, self.dur_max
            ));
        }
        if !self.noise_sigma.is_finite() || self.noise_sigma < 0.0 {
            return fail(format!("noise_sigma must be finite and >= 0, got {}", self.noise_sigma));
        }
        Ok(())
    }
}

/// One evaluation unit: matched positives and negatives for one phrase,
/// plus the generation-time chunking of each positive audio.
#[derive(Debug, Clone)]
pub struct Episode {
    pub positives: Vec<LabeledPair>,
    pub negatives: Vec<LabeledPair>,
    /// Ground-truth boundaries, one per positive, in order.
    pub true_boundaries: Vec<PartitionBoundaries>,
}

fn prototype(vocab: &[f64], dim: usize, word: usize) -> &[f64] {
    &vocab[word * dim..(word + 1) * dim]
}

fn nearest_other_word(vocab: &[f64], dim: usize, word: usize, vocab_size: usize) -> usize {
    let target = prototype(vocab, dim, word);
    let mut best = usize::MAX;
    let mut best_dist = f64::INFINITY;
    for v in 0..vocab_size {
        if v == word {
            continue;
        }
        let dist = euclidean(prototype(vocab, dim, v), target);
        if dist < best_dist {
            best_dist = dist;
            best = v;
        }
    }
    best
}

fn synth_audio(
    rng: &mut ChaCha8Rng,
    cfg: &SynthConfig,
    vocab: &[f64],
    phrase: &[usize],
) -> Result<(EmbeddingSequence, PartitionBoundaries)> {
    let dur_span = (cfg.dur_max - cfg.dur_min + 1) as u64;
    let durations: Vec<usize> = phrase
        .iter()
        .map(|_| cfg.dur_min + gen_index(rng, dur_span) as usize)
        .collect();
    let n: usize = durations.iter().sum();

    let mut data = Vec::with_capacity(n * cfg.dim);
    for (&word, &dur) in phrase.iter().zip(&durations) {
        let proto = prototype(vocab, cfg.dim, word);
        for _ in 0..dur {
            data.extend_from_slice(proto);
        }
    }
    if cfg.noise_sigma > 0.0 {
        let mut noise = vec![0.0; data.len()];
        fill_standard_normal(rng, &mut noise);
        for (v, e) in data.iter_mut().zip(&noise) {
            *v += cfg.noise_sigma * e;
        }
    }

    let boundaries = PartitionBoundaries::from_chunk_sizes(&durations)?;
    Ok((EmbeddingSequence::new(data, n, cfg.dim)?, boundaries))
}

/// Generates episode `episode_index` under `cfg`. Identical inputs give
/// identical episodes.
pub fn generate_episode(cfg: &SynthConfig, episode_index: u64) -> Result<Episode> {
    cfg.validate()?;
    let mut rng = rng_from_seed(derive_seed(cfg.seed, episode_index));

    // vocabulary of unit-norm prototypes
    let mut vocab = vec![0.0; cfg.vocab_size * cfg.dim];
    fill_standard_normal(&mut rng, &mut vocab);
    for row in vocab.chunks_exact_mut(cfg.dim) {
        let norm = row.iter().map(|x| x * x).sum::<f64>().sqrt();
        assert!(norm > 0.0, "zero-norm prototype draw");
        for x in row.iter_mut() {
            *x /= norm;
        }
    }

    let mut pool: Vec<usize> = (0..cfg.vocab_size).collect();
    let phrase = sample_distinct(&mut rng, &mut pool, cfg.phrase_len);

    let mut text_data = Vec::with_capacity(cfg.phrase_len * cfg.dim);
    for &word in &phrase {
        text_data.extend_from_slice(prototype(&vocab, cfg.dim, word));
    }
    let text = EmbeddingSequence::new(text_data, cfg.phrase_len, cfg.dim)?;

    let mut positives = Vec::with_capacity(POSITIVES_PER_EPISODE);
    let mut true_boundaries = Vec::with_capacity(POSITIVES_PER_EPISODE);
    for _ in 0..POSITIVES_PER_EPISODE {
        let (audio, bounds) = synth_audio(&mut rng, cfg, &vocab, &phrase)?;
        positives.push(LabeledPair::new(audio, text.clone(), Label::Positive)?);
        true_boundaries.push(bounds);
    }

    let mut negatives = Vec::with_capacity(NEGATIVES_PER_EPISODE);
    for _ in 0..NEGATIVES_PER_EPISODE {
        let neg_phrase = if cfg.hard_negative {
            let at = gen_index(&mut rng, cfg.phrase_len as u64) as usize;
            let mut perturbed = phrase.clone();
            perturbed[at] = nearest_other_word(&vocab, cfg.dim, phrase[at], cfg.vocab_size);
            perturbed
        } else {
            let mut disjoint: Vec<usize> =
                (0..cfg.vocab_size).filter(|w| !phrase.contains(w)).collect();
            sample_distinct(&mut rng, &mut disjoint, cfg.phrase_len)
        };
        let (audio, _) = synth_audio(&mut rng, cfg, &vocab, &neg_phrase)?;
        negatives.push(LabeledPair::new(audio, text.clone(), Label::Negative)?);
    }

    Ok(Episode {
        positives,
        negatives,
        true_boundaries,
    })
}

/// Episodes 0..num_episodes under `cfg`.
pub fn generate_corpus(cfg: &SynthConfig, num_episodes: usize) -> Result<Vec<Episode>> {
    if num_episodes == 0 {
        return Err(Error::InvalidConfig {
            reason: "num_episodes must be at least 1".into(),
        });
    }
    (0..num_episodes as u64)
        .map(|i| generate_episode(cfg, i))
        .collect()
}
