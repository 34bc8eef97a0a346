//! Seeded property suites with replayable failures.
//!
//! Every suite runs `trials` independent trials. Trial `k` draws all its
//! randomness from a ChaCha8 stream seeded by [`trial_seed`]`(seed, k)`, so a
//! single failing trial can be replayed from the seed printed in the report.

pub mod fixtures;
mod suites;

pub use suites::{reflexive_end_p3, two_reflexive_c4, two_reflexive_diamond};

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Large cliques never straddle a factor cut.
    Lemma1,
    /// Both sides of the two-reflexive split are connected and keep distances.
    Lemma2,
    /// Retraction ⇒ compaction ⇒ surjective ⇒ plain on the same input.
    Implications,
    /// Matching cut ⇔ factor cut of the clique gadget.
    Thm1,
    /// Factor cut ⇔ surjective colouring of the two-reflexive gadget.
    Thm2,
    /// Homomorphisms from the colouring gadget are non-expansive and put
    /// both reflexive vertices on some clique.
    Lemma4,
    /// The twin lift preserves the surjective answer.
    Lift,
    /// Classifier against the labelled figure cases and the small oracle.
    Classifier,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Classifier,
        Suite::Lemma1,
        Suite::Lemma2,
        Suite::Implications,
        Suite::Thm1,
        Suite::Thm2,
        Suite::Lemma4,
        Suite::Lift,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma1 => "lemma1",
            Suite::Lemma2 => "lemma2",
            Suite::Implications => "implications",
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::Lemma4 => "lemma4",
            Suite::Lift => "lift",
            Suite::Classifier => "classifier",
        }
    }

    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Lemma1 => 12,
            Suite::Lemma2 => 8,
            Suite::Implications => 6,
            Suite::Thm1 => 7,
            Suite::Thm2 => 4,
            Suite::Lemma4 => 3,
            Suite::Lift => 3,
            Suite::Classifier => 4,
        }
    }

    pub fn default_trials(self) -> usize {
        match self {
            Suite::Lemma1 => 200,
            Suite::Lemma2 => 100,
            Suite::Implications => 500,
            Suite::Thm1 => 200,
            Suite::Thm2 => 300,
            Suite::Lemma4 => 20,
            Suite::Lift => 20,
            Suite::Classifier => 100,
        }
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub suite: Suite,
    pub seed: u64,
    pub trials: usize,
    pub max_n: usize,
}

impl VerifyConfig {
    pub fn new(suite: Suite, seed: u64) -> Self {
        VerifyConfig { suite, seed, trials: suite.default_trials(), max_n: suite.default_max_n() }
    }
}

pub fn trial_seed(seed: u64, index: usize) -> u64 {
    // splitmix64 finaliser over the pair
    let mut z = seed ^ (index as u64).wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Skip(String),
    Fail { message: String, instance: String },
}

/// Per-trial state: its random stream and named counters.
pub struct Trial {
    pub index: usize,
    pub rng: ChaCha8Rng,
    pub max_n: usize,
    counters: BTreeMap<String, u64>,
}

impl Trial {
    fn new(index: usize, seed: u64, max_n: usize) -> Self {
        Trial { index, rng: ChaCha8Rng::seed_from_u64(seed), max_n, counters: BTreeMap::new() }
    }

    pub fn bump(&mut self, name: &str, by: u64) {
        *self.counters.entry(name.to_string()).or_default() += by;
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FailureRecord {
    pub trial: usize,
    pub trial_seed: u64,
    pub message: String,
    pub instance: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub max_n: usize,
    pub attempted: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub skip_reasons: BTreeMap<String, usize>,
    pub failures: Vec<FailureRecord>,
    pub counters: BTreeMap<String, u64>,
    #[serde(rename = "elapsed_ms")]
    #[serde(serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1000.0)
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn counter(&self, name: &str) -> u64 {
        self.counters.get(name).copied().unwrap_or(0)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "SUITE {} seed={} max_n={}", self.suite, self.seed, self.max_n);
        let _ = writeln!(
            out,
            "attempted={} passed={} failed={} skipped={} elapsed={:.3}s",
            self.attempted,
            self.passed,
            self.failed,
            self.skipped,
            self.elapsed.as_secs_f64()
        );
        for (k, v) in &self.counters {
            let _ = writeln!(out, "counter {k}={v}");
        }
        for (k, v) in &self.skip_reasons {
            let _ = writeln!(out, "skip {v}x {k}");
        }
        for f in &self.failures {
            let _ = writeln!(out, "FAIL trial={} trial_seed={}: {}", f.trial, f.trial_seed, f.message);
            for line in f.instance.lines() {
                let _ = writeln!(out, "  {line}");
            }
        }
        let _ = writeln!(out, "RESULT {}", if self.ok() { "PASS" } else { "FAIL" });
        out
    }
}

pub fn run_suite(config: &VerifyConfig) -> VerificationReport {
    let start = Instant::now();
    let trials = suites::trial_count(config.suite, config.trials);
    let results: Vec<(usize, u64, Outcome, BTreeMap<String, u64>)> = (0..trials)
        .into_par_iter()
        .map(|index| {
            let seed = trial_seed(config.seed, index);
            let (outcome, counters) = run_trial(config.suite, index, seed, config.max_n);
            (index, seed, outcome, counters)
        })
        .collect();

    let mut report = VerificationReport {
        suite: config.suite.name().to_string(),
        seed: config.seed,
        max_n: config.max_n,
        attempted: results.len(),
        passed: 0,
        failed: 0,
        skipped: 0,
        skip_reasons: BTreeMap::new(),
        failures: Vec::new(),
        counters: BTreeMap::new(),
        elapsed: Duration::ZERO,
    };
    for (index, seed, outcome, counters) in results {
        for (k, v) in counters {
            *report.counters.entry(k).or_default() += v;
        }
        match outcome {
            Outcome::Pass => report.passed += 1,
            Outcome::Skip(why) => {
                report.skipped += 1;
                *report.skip_reasons.entry(why).or_default() += 1;
            }
            Outcome::Fail { message, instance } => {
                report.failed += 1;
                report.failures.push(FailureRecord { trial: index, trial_seed: seed, message, instance });
            }
        }
    }
    report.elapsed = start.elapsed();
    report
}

/// Runs one trial from its own seed, as printed in a failure record.
pub fn run_trial(suite: Suite, index: usize, trial_seed: u64, max_n: usize) -> (Outcome, BTreeMap<String, u64>) {
    let mut trial = Trial::new(index, trial_seed, max_n);
    let outcome = suites::run(suite, &mut trial);
    (outcome, trial.counters)
}
