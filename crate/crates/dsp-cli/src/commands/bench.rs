//! `dsp bench`: median wall-clock of the aligner over a grid of sizes,
//! on seeded random inputs. The output CSV backs the quadratic-scaling
//! check.

use std::fs;
use std::hint::black_box;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::Context;
use clap::Args;

use dsp_core::rng::{derive_seed, fill_uniform, rng_from_seed};
use dsp_core::{dsp_align, dsp_cost, EmbeddingSequence};

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Audio lengths to time, comma separated
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub n: Vec<usize>,

    /// Chunk counts to time, comma separated
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub m: Vec<usize>,

    #[arg(long, default_value_t = 144)]
    pub dim: usize,

    /// Timed runs per (n, m) cell; the median is reported
    #[arg(long, default_value_t = 5)]
    pub repeats: usize,

    /// Time the O(n)-space cost-only variant instead of the full table
    #[arg(long)]
    pub cost_only: bool,

    /// Also write the CSV here (it always goes to stdout)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

const BENCH_SEED: u64 = 0xBE9C;

fn random_sequence(n: usize, d: usize, seed: u64) -> EmbeddingSequence {
    let mut rng = rng_from_seed(seed);
    let mut data = vec![0.0; n * d];
    fill_uniform(&mut rng, -1.0, 1.0, &mut data);
    EmbeddingSequence::new(data, n, d).expect("uniform draws are finite")
}

pub fn run(args: &BenchArgs) -> anyhow::Result<()> {
    if args.n.is_empty() || args.m.is_empty() {
        anyhow::bail!("need at least one value for --n and --m");
    }
    if args.dim == 0 || args.repeats == 0 {
        anyhow::bail!("--dim and --repeats must be positive");
    }
    for (&n, &m) in args.n.iter().flat_map(|n| args.m.iter().map(move |m| (n, m))) {
        if m == 0 || n < m {
            anyhow::bail!("invalid cell n={n}, m={m}: need n >= m >= 1");
        }
    }

    let mut csv = String::from("n,m,d,repeats,median_ms\n");
    let mut cell = 0u64;
    for &n in &args.n {
        for &m in &args.m {
            let audio = random_sequence(n, args.dim, derive_seed(BENCH_SEED, cell));
            let text = random_sequence(m, args.dim, derive_seed(BENCH_SEED, cell + 1));
            cell += 2;

            let time_once = || -> anyhow::Result<f64> {
                let start = Instant::now();
                if args.cost_only {
                    black_box(dsp_cost(&audio, &text)?);
                } else {
                    black_box(dsp_align(&audio, &text)?);
                }
                Ok(start.elapsed().as_secs_f64() * 1e3)
            };

            time_once()?; // warmup
            let mut samples = Vec::with_capacity(args.repeats);
            for _ in 0..args.repeats {
                samples.push(time_once()?);
            }
            samples.sort_by(f64::total_cmp);
            let median = samples[samples.len() / 2];
            csv.push_str(&format!("{n},{m},{},{},{median:.3}\n", args.dim, args.repeats));
        }
    }

    print!("{csv}");
    if let Some(out) = &args.out {
        fs::write(out, csv).with_context(|| format!("writing {}", out.display()))?;
    }
    Ok(())
}
