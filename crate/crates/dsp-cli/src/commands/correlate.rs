//! `dsp correlate`: text-to-audio and audio-to-audio cosine matrices,
//! plus the aligner's cuts for overlaying on them.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::Args;
use serde::Serialize;

use dsp_core::formats::load_embedding_file;
use dsp_core::similarity::{cosine_matrix, CosineMatrix};
use dsp_core::dsp_align;

#[derive(Args, Debug)]
pub struct CorrelateArgs {
    /// Audio embedding file (binary or CSV)
    #[arg(long)]
    pub audio: PathBuf,

    /// Text embedding file (binary or CSV)
    #[arg(long)]
    pub text: PathBuf,

    /// Prefix for <prefix>.text_audio.csv, <prefix>.audio_audio.csv and
    /// <prefix>.boundaries.json
    #[arg(long)]
    pub out_prefix: PathBuf,
}

#[derive(Serialize)]
struct BoundariesFile {
    cuts: Vec<usize>,
    cost: f64,
}

pub fn run(args: &CorrelateArgs) -> anyhow::Result<()> {
    let audio = load_embedding_file(&args.audio)
        .with_context(|| format!("loading audio {}", args.audio.display()))?;
    let text = load_embedding_file(&args.text)
        .with_context(|| format!("loading text {}", args.text.display()))?;

    let text_audio = cosine_matrix(&text, &audio)?;
    let audio_audio = cosine_matrix(&audio, &audio)?;
    for row in &text_audio.zero_rows_left {
        eprintln!("warning: text row {row} has zero norm, similarities emitted as 0");
    }
    for row in &text_audio.zero_rows_right {
        eprintln!("warning: audio row {row} has zero norm, similarities emitted as 0");
    }

    write_matrix(&args.out_prefix, ".text_audio.csv", &text_audio)?;
    write_matrix(&args.out_prefix, ".audio_audio.csv", &audio_audio)?;

    let outcome = dsp_align(&audio, &text)?;
    let boundaries = BoundariesFile {
        cuts: outcome.boundaries.cuts().to_vec(),
        cost: outcome.cost,
    };
    let path = with_suffix(&args.out_prefix, ".boundaries.json");
    fs::write(&path, format!("{}\n", serde_json::to_string(&boundaries)?))
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s: OsString = prefix.to_path_buf().into_os_string();
    s.push(suffix);
    PathBuf::from(s)
}

fn write_matrix(prefix: &Path, suffix: &str, matrix: &CosineMatrix) -> anyhow::Result<()> {
    let mut out = String::new();
    for r in 0..matrix.rows {
        for c in 0..matrix.cols {
            if c > 0 {
                out.push(',');
            }
            out.push_str(&format!("{}", matrix.at(r, c)));
        }
        out.push('\n');
    }
    let path = with_suffix(prefix, suffix);
    fs::write(&path, out).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}
