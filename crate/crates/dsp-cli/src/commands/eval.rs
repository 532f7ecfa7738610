//! `dsp eval`: AUC, EER and the EER threshold over a score file.

use std::fs;
use std::path::PathBuf;

use anyhow::Context;
use clap::Args;

use dsp_core::formats::parse_score_records;
use dsp_core::{evaluate, ScoredPair};

#[derive(Args, Debug)]
pub struct EvalArgs {
    /// JSON-lines score records from `dsp align`
    #[arg(long)]
    pub scores: PathBuf,

    /// Output path for the JSON report
    #[arg(long)]
    pub out: PathBuf,
}

pub fn run(args: &EvalArgs) -> anyhow::Result<()> {
    let text = fs::read_to_string(&args.scores)
        .with_context(|| format!("reading scores {}", args.scores.display()))?;
    let records = parse_score_records(&text).context("parsing score records")?;
    let pairs: Vec<ScoredPair> = records
        .iter()
        .map(|r| ScoredPair::new(r.id.clone(), r.cost, r.label))
        .collect();
    let report = evaluate(&pairs)?;
    let json = serde_json::to_string(&report)?;
    fs::write(&args.out, format!("{json}\n"))
        .with_context(|| format!("writing {}", args.out.display()))?;
    println!("{json}");
    Ok(())
}
