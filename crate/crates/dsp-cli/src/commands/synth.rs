//! `dsp synth`: write a synthetic corpus (binary embeddings plus a
//! manifest) to a directory. Reruns with identical flags are
//! bit-identical.

use std::fs;
use std::path::PathBuf;

use anyhow::Context;
use clap::Args;

use dsp_core::formats::{save_embedding_binary, write_manifest, ManifestRecord};
use dsp_core::{generate_episode, Label, SynthConfig};

#[derive(Args, Debug)]
pub struct SynthArgs {
    /// Vocabulary size (must be at least twice the phrase length)
    #[arg(long, default_value_t = 16)]
    pub vocab: usize,

    /// Embedding dimension
    #[arg(long, default_value_t = 16)]
    pub dim: usize,

    /// Words per phrase, 1 to 4
    #[arg(long, default_value_t = 3)]
    pub phrase_len: usize,

    /// Minimum frames per word
    #[arg(long, default_value_t = 3)]
    pub dur_min: usize,

    /// Maximum frames per word
    #[arg(long, default_value_t = 10)]
    pub dur_max: usize,

    /// Per-entry Gaussian noise scale
    #[arg(long, default_value_t = 0.1)]
    pub noise: f64,

    /// Use hard negatives (nearest-word substitution) instead of easy
    /// (disjoint-phrase) ones
    #[arg(long)]
    pub hard_neg: bool,

    /// Number of episodes to generate
    #[arg(long)]
    pub episodes: usize,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Output directory (created if missing)
    #[arg(long)]
    pub outdir: PathBuf,
}

pub fn run(args: &SynthArgs) -> anyhow::Result<()> {
    if args.episodes == 0 {
        anyhow::bail!("--episodes must be at least 1");
    }
    let cfg = SynthConfig {
        vocab_size: args.vocab,
        dim: args.dim,
        phrase_len: args.phrase_len,
        dur_min: args.dur_min,
        dur_max: args.dur_max,
        noise_sigma: args.noise,
        hard_negative: args.hard_neg,
        seed: args.seed,
    };
    cfg.validate()?;
    fs::create_dir_all(&args.outdir)
        .with_context(|| format!("creating {}", args.outdir.display()))?;

    let mut manifest: Vec<ManifestRecord> = Vec::new();
    for episode in 0..args.episodes as u64 {
        let ep = generate_episode(&cfg, episode)?;
        let text_name = format!("ep{episode:04}.text.emb");
        save_embedding_binary(&args.outdir.join(&text_name), &ep.positives[0].text)?;
        for (j, pair) in ep.positives.iter().enumerate() {
            let stem = format!("ep{episode:04}.pos{j}");
            let audio_name = format!("{stem}.audio.emb");
            save_embedding_binary(&args.outdir.join(&audio_name), &pair.audio)?;
            manifest.push(ManifestRecord {
                id: stem,
                audio_path: audio_name,
                text_path: text_name.clone(),
                label: Label::Positive,
            });
        }
        for (j, pair) in ep.negatives.iter().enumerate() {
            let stem = format!("ep{episode:04}.neg{j}");
            let audio_name = format!("{stem}.audio.emb");
            save_embedding_binary(&args.outdir.join(&audio_name), &pair.audio)?;
            manifest.push(ManifestRecord {
                id: stem,
                audio_path: audio_name,
                text_path: text_name.clone(),
                label: Label::Negative,
            });
        }
    }

    let manifest_path = args.outdir.join("manifest.jsonl");
    fs::write(&manifest_path, write_manifest(&manifest))
        .with_context(|| format!("writing {}", manifest_path.display()))?;
    println!(
        "wrote {} episodes ({} records) to {}",
        args.episodes,
        manifest.len(),
        args.outdir.display()
    );
    Ok(())
}
