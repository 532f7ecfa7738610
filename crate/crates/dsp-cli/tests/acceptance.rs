//! Acceptance suite: every release gate as one test, each printing a
//! pass line (visible with `-- --nocapture`).
//!
//! Gates: DP-vs-exhaustive oracle equivalence and backtracking
//! consistency over 1000 seeded instances, scheme dominance, the loss
//! closed forms and hinge bands, metric correctness against counting
//! oracles, the end-to-end scheme ordering on a synthetic corpus,
//! zero-noise boundary recovery, wall-clock bounds with quadratic
//! scaling, and byte-exact I/O round-trips.

use std::fs;
use std::process::Command;
use std::sync::Mutex;
use std::time::Instant;

use dsp_core::formats::{
    read_embedding_binary, write_embedding_binary, write_embedding_csv, write_manifest,
    ManifestRecord,
};
use dsp_core::rng::{derive_seed, fill_uniform, gen_index, rng_from_seed, ChaCha8Rng};
use dsp_core::{
    align_with_scheme, auc, brute_force_align, contrastive_loss, cost_of_partition, dsp_align,
    eer, equal_partition, evaluate, generate_episode, random_partition, EmbeddingSequence, Label,
    LossConfig, Scheme, ScoredPair, SynthConfig,
};

/// Serializes the wall-clock-sensitive tests so they do not contend.
static TIMED: Mutex<()> = Mutex::new(());

fn random_sequence(rng: &mut ChaCha8Rng, n: usize, d: usize) -> EmbeddingSequence {
    let mut data = vec![0.0; n * d];
    fill_uniform(rng, -1.0, 1.0, &mut data);
    EmbeddingSequence::new(data, n, d).unwrap()
}

/// The shared 1000-instance set: n in [1,12], m in [1,min(n,4)],
/// d in [1,8], entries uniform in [-1,1], fixed seed.
fn oracle_instances() -> Vec<(EmbeddingSequence, EmbeddingSequence)> {
    let mut rng = rng_from_seed(0xACCE);
    (0..1000)
        .map(|_| {
            let n = 1 + gen_index(&mut rng, 12) as usize;
            let m = 1 + gen_index(&mut rng, n.min(4) as u64) as usize;
            let d = 1 + gen_index(&mut rng, 8) as usize;
            let audio = random_sequence(&mut rng, n, d);
            let text = random_sequence(&mut rng, m, d);
            (audio, text)
        })
        .collect()
}

#[test]
fn criterion_1_oracle_equivalence() {
    let _guard = TIMED.lock().unwrap();
    let instances = oracle_instances();
    let start = Instant::now();
    for (idx, (audio, text)) in instances.iter().enumerate() {
        let dp = dsp_align(audio, text).unwrap();
        let bf = brute_force_align(audio, text).unwrap();
        assert!(
            (dp.cost - bf.cost).abs() <= 1e-9,
            "instance {idx}: dp {} vs oracle {}",
            dp.cost,
            bf.cost
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}, budget 10 s");
    println!("criterion 1 (oracle equivalence, 1000 instances in {elapsed:?}): PASS");
}

#[test]
fn criterion_2_backtracking_consistency() {
    for (idx, (audio, text)) in oracle_instances().iter().enumerate() {
        let dp = dsp_align(audio, text).unwrap();
        let replayed = cost_of_partition(audio, text, &dp.boundaries).unwrap();
        assert!(
            (dp.cost - replayed).abs() <= 1e-9,
            "instance {idx}: cost {} but boundaries replay to {replayed}",
            dp.cost
        );
        let bf = brute_force_align(audio, text).unwrap();
        assert_eq!(
            dp.boundaries, bf.boundaries,
            "instance {idx}: boundaries disagree with the lexicographically smallest argmin"
        );
    }
    println!("criterion 2 (backtracking consistency): PASS");
}

#[test]
fn criterion_3_dominance() {
    let mut rng = rng_from_seed(0xD011);
    for (idx, (audio, text)) in oracle_instances().iter().enumerate() {
        let dp = dsp_align(audio, text).unwrap();
        let equal = equal_partition(audio.n(), text.n()).unwrap();
        let equal_cost = cost_of_partition(audio, text, &equal).unwrap();
        assert!(
            dp.cost <= equal_cost + 1e-9,
            "instance {idx}: dp {} above equal {equal_cost}",
            dp.cost
        );
        for _ in 0..3 {
            let seed = gen_index(&mut rng, u64::MAX);
            let random = random_partition(audio.n(), text.n(), seed).unwrap();
            let random_cost = cost_of_partition(audio, text, &random).unwrap();
            assert!(
                dp.cost <= random_cost + 1e-9,
                "instance {idx}: dp {} above random {random_cost} (seed {seed})",
                dp.cost
            );
        }
    }
    println!("criterion 3 (dominance over equal and random): PASS");
}

#[test]
fn criterion_4_contrastive_loss() {
    let cfg = LossConfig::default();
    assert_eq!(cfg.m_pos, 0.2);
    assert_eq!(cfg.m_neg, 7.0);
    // closed forms
    assert_eq!(contrastive_loss(0.1, Label::Positive, &cfg).unwrap(), 0.0);
    assert_eq!(contrastive_loss(1.2, Label::Positive, &cfg).unwrap(), 1.0);
    assert_eq!(contrastive_loss(5.0, Label::Negative, &cfg).unwrap(), 2.0);
    // hinge-zero bands on 10^4 random samples
    let mut rng = rng_from_seed(0x1055);
    let mut zs = vec![0.0; 10_000];
    fill_uniform(&mut rng, 0.0, 10.0, &mut zs);
    for (i, &z) in zs.iter().enumerate() {
        let label = if i % 2 == 0 { Label::Positive } else { Label::Negative };
        let loss = contrastive_loss(z, label, &cfg).unwrap();
        assert!(loss >= 0.0);
        match label {
            Label::Positive if z <= cfg.m_pos => assert_eq!(loss, 0.0, "z={z}"),
            Label::Positive => assert_eq!(loss, z - cfg.m_pos, "z={z}"),
            Label::Negative if z >= cfg.m_neg => assert_eq!(loss, 0.0, "z={z}"),
            Label::Negative => assert_eq!(loss, cfg.m_neg - z, "z={z}"),
        }
    }
    println!("criterion 4 (contrastive loss closed forms and bands): PASS");
}

/// Pairwise counting oracle for AUC.
fn auc_by_counting(pairs: &[ScoredPair]) -> f64 {
    let pos: Vec<f64> = pairs.iter().filter(|s| s.label.is_positive()).map(|s| s.cost).collect();
    let neg: Vec<f64> = pairs.iter().filter(|s| !s.label.is_positive()).map(|s| s.cost).collect();
    let mut credit = 0.0;
    for &p in &pos {
        for &n in &neg {
            if p < n {
                credit += 1.0;
            } else if p == n {
                credit += 0.5;
            }
        }
    }
    credit / (pos.len() as f64 * neg.len() as f64)
}

/// Exhaustive threshold scan: best max(FPR, FNR) over the 2T+1
/// candidate positions, plus the largest adjacent rate jump.
fn eer_by_scan(pairs: &[ScoredPair]) -> (f64, f64) {
    let mut costs: Vec<f64> = pairs.iter().map(|s| s.cost).collect();
    costs.sort_by(f64::total_cmp);
    costs.dedup();
    let mut candidates = vec![costs[0] - 1.0];
    for w in costs.windows(2) {
        candidates.push(w[0]);
        candidates.push((w[0] + w[1]) / 2.0);
    }
    candidates.push(*costs.last().unwrap());
    candidates.push(costs.last().unwrap() + 1.0);

    let n_pos = pairs.iter().filter(|s| s.label.is_positive()).count() as f64;
    let n_neg = pairs.len() as f64 - n_pos;
    let rates = |theta: f64| {
        let fp = pairs.iter().filter(|s| !s.label.is_positive() && s.cost <= theta).count();
        let missed = pairs.iter().filter(|s| s.label.is_positive() && s.cost > theta).count();
        (fp as f64 / n_neg, missed as f64 / n_pos)
    };
    let mut best = f64::INFINITY;
    let mut max_gap: f64 = 0.0;
    let mut prev = rates(candidates[0]);
    for &theta in &candidates {
        let (fpr, fnr) = rates(theta);
        best = best.min(fpr.max(fnr));
        max_gap = max_gap.max((fpr - prev.0).abs()).max((fnr - prev.1).abs());
        prev = (fpr, fnr);
    }
    (best, max_gap)
}

#[test]
fn criterion_5_metrics_correctness() {
    let mut rng = rng_from_seed(0x3e7);
    for round in 0..100 {
        let n_pos = 1 + gen_index(&mut rng, 25) as usize;
        let n_neg = 1 + gen_index(&mut rng, 25) as usize;
        let mut costs = vec![0.0; n_pos + n_neg];
        fill_uniform(&mut rng, 0.0, 5.0, &mut costs);
        let pairs: Vec<ScoredPair> = costs
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let label = if i < n_pos { Label::Positive } else { Label::Negative };
                ScoredPair::new(format!("s{i}"), c, label)
            })
            .collect();

        let fast = auc(&pairs).unwrap();
        let slow = auc_by_counting(&pairs);
        assert!(
            (fast - slow).abs() <= 1e-12,
            "round {round}: rank-based {fast} vs counted {slow}"
        );

        let (interp, _theta) = eer(&pairs).unwrap();
        let (scan, gap) = eer_by_scan(&pairs);
        assert!(
            (interp - scan).abs() <= gap + 1e-12,
            "round {round}: eer {interp} vs scan {scan} (gap {gap})"
        );
    }

    // perfect separation is exact
    let separated: Vec<ScoredPair> = (0..5)
        .map(|i| ScoredPair::new(format!("p{i}"), 0.1 * i as f64, Label::Positive))
        .chain((0..5).map(|i| ScoredPair::new(format!("n{i}"), 3.0 + i as f64, Label::Negative)))
        .collect();
    assert_eq!(auc(&separated).unwrap(), 1.0);
    assert_eq!(eer(&separated).unwrap().0, 0.0);
    println!("criterion 5 (AUC/EER against counting oracles): PASS");
}

#[test]
fn criterion_6_scheme_ordering_on_synthetic_corpus() {
    let _guard = TIMED.lock().unwrap();
    let start = Instant::now();
    let seed = 42u64;
    let schemes = [Scheme::Dsp, Scheme::Equal, Scheme::Random];
    let mut scores: Vec<Vec<ScoredPair>> = vec![Vec::new(); schemes.len()];

    let mut pair_index = 0u64;
    for episode in 0..200u64 {
        let cfg = SynthConfig {
            vocab_size: 16,
            dim: 16,
            phrase_len: 2 + (episode as usize % 3),
            dur_min: 3,
            dur_max: 10,
            noise_sigma: 0.15,
            hard_negative: true,
            seed,
        };
        let ep = generate_episode(&cfg, episode).unwrap();
        for pair in ep.positives.iter().chain(&ep.negatives) {
            for (s, bucket) in schemes.iter().zip(scores.iter_mut()) {
                let outcome = align_with_scheme(pair, *s, derive_seed(seed, pair_index)).unwrap();
                bucket.push(ScoredPair::new(pair_index.to_string(), outcome.cost, pair.label));
            }
            pair_index += 1;
        }
    }

    let reports: Vec<_> = scores.iter().map(|s| evaluate(s).unwrap()).collect();
    let (dsp, equal, random) = (&reports[0], &reports[1], &reports[2]);
    println!(
        "  dsp auc={:.4} eer={:.4} | equal auc={:.4} eer={:.4} | random auc={:.4} eer={:.4}",
        dsp.auc, dsp.eer, equal.auc, equal.eer, random.auc, random.eer
    );
    assert!(dsp.auc >= equal.auc, "AUC: dsp {} < equal {}", dsp.auc, equal.auc);
    assert!(equal.auc >= random.auc, "AUC: equal {} < random {}", equal.auc, random.auc);
    assert!(dsp.auc - equal.auc > 0.0, "AUC margin not strict");
    assert!(dsp.eer <= equal.eer, "EER: dsp {} > equal {}", dsp.eer, equal.eer);
    assert!(equal.eer <= random.eer, "EER: equal {} > random {}", equal.eer, random.eer);

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}, budget 60 s");
    println!("criterion 6 (scheme ordering, 200 episodes in {elapsed:?}): PASS");
}

#[test]
fn criterion_7_zero_noise_recoverability() {
    let cfg = SynthConfig {
        vocab_size: 16,
        dim: 16,
        phrase_len: 3,
        dur_min: 3,
        dur_max: 10,
        noise_sigma: 0.0,
        hard_negative: true,
        seed: 9,
    };
    let mut positives = 0usize;
    for episode in 0..100u64 {
        let ep = generate_episode(&cfg, episode).unwrap();
        for (pair, truth) in ep.positives.iter().zip(&ep.true_boundaries) {
            let out = dsp_align(&pair.audio, &pair.text).unwrap();
            assert!(
                out.cost <= 1e-9,
                "episode {episode}: zero-noise cost {}",
                out.cost
            );
            assert_eq!(&out.boundaries, truth, "episode {episode}");
            positives += 1;
        }
    }
    assert_eq!(positives, 300);
    println!("criterion 7 (zero-noise recovery on {positives}/300 positives): PASS");
}

#[test]
fn criterion_8_performance_and_quadratic_scaling() {
    let _guard = TIMED.lock().unwrap();
    let mut rng = rng_from_seed(0xBE9C);
    let text = random_sequence(&mut rng, 4, 144);
    let audio_500 = random_sequence(&mut rng, 500, 144);
    let audio_1000 = random_sequence(&mut rng, 1000, 144);

    let median_secs = |audio: &EmbeddingSequence| {
        dsp_align(audio, &text).unwrap(); // warmup
        let mut samples: Vec<f64> = (0..5)
            .map(|_| {
                let start = Instant::now();
                std::hint::black_box(dsp_align(audio, &text).unwrap());
                start.elapsed().as_secs_f64()
            })
            .collect();
        samples.sort_by(f64::total_cmp);
        samples[samples.len() / 2]
    };

    let t_1000 = median_secs(&audio_1000);
    assert!(t_1000 < 2.0, "n=1000, m=4, d=144 took {t_1000:.3} s, budget 2 s");

    let t_500 = median_secs(&audio_500);
    let ratio = t_1000 / t_500;
    assert!(
        (3.0..=6.0).contains(&ratio),
        "doubling n scaled runtime by {ratio:.2} (500: {t_500:.4} s, 1000: {t_1000:.4} s), expected [3, 6]"
    );
    println!(
        "criterion 8 (n=1000 in {t_1000:.3} s, doubling ratio {ratio:.2}): PASS"
    );
}

#[test]
fn criterion_9_io_round_trips() {
    // binary write -> read -> write is bit-identical
    let mut rng = rng_from_seed(0x10);
    let seq = random_sequence(&mut rng, 7, 5);
    let bytes = write_embedding_binary(&seq).unwrap();
    let back = read_embedding_binary(&bytes).unwrap();
    assert_eq!(bytes, write_embedding_binary(&back).unwrap());

    // align output on CSV vs binary encodings is byte-identical
    let dir = tempfile::tempdir().unwrap();
    let root = dir.path();
    let cfg = SynthConfig {
        phrase_len: 2,
        vocab_size: 8,
        seed: 31,
        ..Default::default()
    };
    let mut bin_manifest = Vec::new();
    let mut csv_manifest = Vec::new();
    for episode in 0..3u64 {
        let ep = generate_episode(&cfg, episode).unwrap();
        let write_both = |seq: &EmbeddingSequence, stem: &str| {
            fs::write(root.join(format!("{stem}.emb")), write_embedding_binary(seq).unwrap()).unwrap();
            fs::write(root.join(format!("{stem}.csv")), write_embedding_csv(seq).unwrap()).unwrap();
        };
        let text_stem = format!("ep{episode}.text");
        write_both(&ep.positives[0].text, &text_stem);
        for (j, pair) in ep.positives.iter().chain(&ep.negatives).enumerate() {
            let stem = format!("ep{episode}.pair{j}");
            write_both(&pair.audio, &stem);
            bin_manifest.push(ManifestRecord {
                id: stem.clone(),
                audio_path: format!("{stem}.emb"),
                text_path: format!("{text_stem}.emb"),
                label: pair.label,
            });
            csv_manifest.push(ManifestRecord {
                id: stem.clone(),
                audio_path: format!("{stem}.csv"),
                text_path: format!("{text_stem}.csv"),
                label: pair.label,
            });
        }
    }
    fs::write(root.join("bin.jsonl"), write_manifest(&bin_manifest)).unwrap();
    fs::write(root.join("csv.jsonl"), write_manifest(&csv_manifest)).unwrap();

    let exe = env!("CARGO_BIN_EXE_dsp");
    for scheme in ["dsp", "random"] {
        for (manifest, out) in [("bin.jsonl", "bin_scores"), ("csv.jsonl", "csv_scores")] {
            let status = Command::new(exe)
                .args(["align", "--manifest"])
                .arg(root.join(manifest))
                .args(["--scheme", scheme, "--seed", "5", "--out"])
                .arg(root.join(format!("{out}_{scheme}.jsonl")))
                .status()
                .unwrap();
            assert!(status.success(), "align --scheme {scheme} on {manifest} failed");
        }
        let bin_out = fs::read(root.join(format!("bin_scores_{scheme}.jsonl"))).unwrap();
        let csv_out = fs::read(root.join(format!("csv_scores_{scheme}.jsonl"))).unwrap();
        assert!(!bin_out.is_empty());
        assert_eq!(
            bin_out, csv_out,
            "scheme {scheme}: binary- and CSV-backed score records differ"
        );
    }
    println!("criterion 9 (byte-exact I/O round-trips): PASS");
}
