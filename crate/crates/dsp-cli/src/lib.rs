//! The `dsp` command line: manifest scoring, metric evaluation,
//! synthetic corpus generation, correlation export, and timing.

pub mod commands;

use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "dsp",
    version,
    about = "Partition-aligned scoring of audio/text embedding pairs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Score every manifest pair under a partitioning scheme
    Align(commands::align::AlignArgs),
    /// Compute AUC and EER over a score file
    Eval(commands::eval::EvalArgs),
    /// Generate a synthetic labeled corpus on disk
    Synth(commands::synth::SynthArgs),
    /// Export cosine-similarity matrices plus alignment boundaries
    Correlate(commands::correlate::CorrelateArgs),
    /// Time the aligner across problem sizes
    Bench(commands::bench::BenchArgs),
}

pub fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Align(args) => commands::align::run(&args),
        Command::Eval(args) => commands::eval::run(&args),
        Command::Synth(args) => commands::synth::run(&args),
        Command::Correlate(args) => commands::correlate::run(&args),
        Command::Bench(args) => commands::bench::run(&args),
    }
}
