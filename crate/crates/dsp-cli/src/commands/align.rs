//! `dsp align`: one score record per manifest record, in manifest order.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::Args;

use dsp_core::formats::{
    load_embedding_file, parse_manifest, write_score_records, ManifestRecord, ScoreRecord,
};
use dsp_core::rng::derive_seed;
use dsp_core::{align_with_scheme, LabeledPair, Scheme};

#[derive(Args, Debug)]
pub struct AlignArgs {
    /// JSON-lines manifest: {"id", "audio_path", "text_path", "label"}
    #[arg(long)]
    pub manifest: PathBuf,

    /// Partitioning scheme: dsp, equal or random
    #[arg(long)]
    pub scheme: Scheme,

    /// Base seed for the random scheme; record seeds derive from it by
    /// manifest position
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Downgrade per-record failures to warnings instead of failing the
    /// whole run
    #[arg(long)]
    pub skip_bad: bool,

    /// Output path for the JSON-lines score records
    #[arg(long)]
    pub out: PathBuf,
}

pub fn run(args: &AlignArgs) -> anyhow::Result<()> {
    let text = fs::read_to_string(&args.manifest)
        .with_context(|| format!("reading manifest {}", args.manifest.display()))?;
    let records = parse_manifest(&text).context("parsing manifest")?;
    let base = args
        .manifest
        .parent()
        .map(Path::to_path_buf)
        .unwrap_or_default();

    let mut scores = Vec::with_capacity(records.len());
    let mut failures = 0usize;
    for (idx, record) in records.iter().enumerate() {
        match score_record(&base, record, args.scheme, derive_seed(args.seed, idx as u64)) {
            Ok(score) => scores.push(score),
            Err(err) => {
                failures += 1;
                let level = if args.skip_bad { "warning" } else { "error" };
                eprintln!("{level}: record {:?}: {err:#}", record.id);
            }
        }
    }

    fs::write(&args.out, write_score_records(&scores))
        .with_context(|| format!("writing {}", args.out.display()))?;

    if failures > 0 && !args.skip_bad {
        anyhow::bail!("{failures} of {} records failed", records.len());
    }
    Ok(())
}

fn score_record(
    base: &Path,
    record: &ManifestRecord,
    scheme: Scheme,
    seed: u64,
) -> anyhow::Result<ScoreRecord> {
    let audio = load_embedding_file(&resolve(base, &record.audio_path))
        .with_context(|| format!("loading audio {:?}", record.audio_path))?;
    let text = load_embedding_file(&resolve(base, &record.text_path))
        .with_context(|| format!("loading text {:?}", record.text_path))?;
    let pair = LabeledPair::new(audio, text, record.label)?;
    let outcome = align_with_scheme(&pair, scheme, seed)?;
    Ok(ScoreRecord {
        id: record.id.clone(),
        cost: outcome.cost,
        boundaries: outcome.boundaries.cuts().to_vec(),
        label: record.label,
        scheme: scheme.name().to_string(),
    })
}

fn resolve(base: &Path, path: &str) -> PathBuf {
    let path = Path::new(path);
    if path.is_absolute() {
        path.to_path_buf()
    } else {
        base.join(path)
    }
}
