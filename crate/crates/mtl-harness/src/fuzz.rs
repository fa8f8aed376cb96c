//! Differential testing of a reduction against the evaluator.
//!
//! Family A (constructive) extends models of `φ` with the witness chain and checks that
//! the extension satisfies `ψ` and projects back exactly. Family B (projection) samples
//! extensions of random base words, perturbs their markings and checks that every
//! sample satisfying `ψ` projects to a model of `φ`.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use mtl_core::{Formula, Interval, Prop, TimedWord};
use mtl_semantics::{with_workers, CompiledFormula};
use mtl_syntax::print_formula;

use crate::error::HarnessError;
use crate::reduction::{Method, Reduced};
use crate::sample::{model_pool, random_word, Perturbation, PoolShape};

/// Pass, fail and skip counts of one family.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Tally {
    pub fn total(&self) -> usize {
        self.pass + self.fail + self.skipped
    }

    fn add(&mut self, o: Outcome) {
        match o {
            Outcome::Pass => self.pass += 1,
            Outcome::Fail => self.fail += 1,
            Outcome::Skipped => self.skipped += 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Constructive,
    Projection,
}

/// A failing trial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    pub formula: String,
    pub word: String,
    pub stage: String,
    pub detail: String,
}

/// One trial outcome, as written to the structured report.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct TrialRecord {
    pub family: Family,
    pub trial: usize,
    pub outcome: Outcome,
    pub word: Option<String>,
}

/// Result of [`fuzz_equisat`]. For each family `pass + fail + skipped = trials`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzReport {
    pub formula: String,
    pub method: String,
    pub seed: u64,
    pub trials: usize,
    pub constructive: Tally,
    pub projection: Tally,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip)]
    pub records: Vec<TrialRecord>,
}

impl FuzzReport {
    pub fn failures(&self) -> usize {
        self.constructive.fail + self.projection.fail
    }

    /// The structured report: a header line, then one JSON record per trial.
    pub fn to_json_lines(&self) -> String {
        let mut out = serde_json::to_string(self).expect("reports serialize");
        out.push('\n');
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for FuzzReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "formula: {}", self.formula)?;
        writeln!(f, "method: {}  seed: {}  trials per family: {}", self.method, self.seed, self.trials)?;
        let t = &self.constructive;
        writeln!(f, "constructive: {} pass, {} fail, {} skipped", t.pass, t.fail, t.skipped)?;
        let t = &self.projection;
        writeln!(f, "projection: {} pass, {} fail, {} skipped", t.pass, t.fail, t.skipped)?;
        for c in &self.counterexamples {
            writeln!(f, "counterexample [{}] {}: {}", c.stage, c.word, c.detail)?;
        }
        Ok(())
    }
}

/// Settings shared by both families.
#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub trials: usize,
    pub seed: u64,
    pub pool: PoolShape,
    /// Most edits applied to one sampled extension.
    pub max_edits: usize,
    /// Probability that a projection trial starts from a model of `φ`.
    pub model_bias: f64,
    /// Share of projection trials that are guided.
    pub guided_share: f64,
    /// Proposals per guided trial.
    pub climb_steps: usize,
}

impl FuzzConfig {
    pub fn new(trials: usize, seed: u64) -> Self {
        Self {
            trials,
            seed,
            pool: PoolShape::default(),
            max_edits: 3,
            model_bias: 0.5,
            guided_share: 0.5,
            climb_steps: 80,
        }
    }
}

/// Everything a trial needs, shared read-only across workers.
pub struct Bench<'a> {
    pub phi: &'a Formula,
    pub phi_c: CompiledFormula,
    pub reduced: &'a Reduced,
    pub pool: Vec<TimedWord>,
    pub perturbation: Perturbation,
    /// Edits used by guided trials: extension propositions only.
    pub repair: Perturbation,
    pub witnesses: Vec<Prop>,
    pub config: FuzzConfig,
}

impl<'a> Bench<'a> {
    pub fn new(phi: &'a Formula, reduced: &'a Reduced, config: FuzzConfig) -> Self {
        let phi_c = CompiledFormula::new(phi);
        let mut rng = trial_rng(config.seed, 0, u64::MAX);
        let pool = model_pool(&mut rng, &phi_c, reduced.sigma(), config.trials, &config.pool);
        let perturbation = Perturbation {
            sigma: reduced.sigma().iter().cloned().collect(),
            ext: reduced.extension_alphabet().into_iter().collect(),
            change_points: reduced.method() == Method::Oversampled,
            toggle_base: true,
        };
        let repair = Perturbation { toggle_base: false, ..perturbation.clone() };
        let witnesses = reduced.witnesses().into_iter().collect();
        Self { phi, phi_c, reduced, pool, perturbation, repair, witnesses, config }
    }

    fn counterexample(&self, word: &TimedWord, stage: &str, detail: String) -> Counterexample {
        Counterexample { formula: print_formula(self.phi), word: word.to_string(), stage: stage.to_string(), detail }
    }

    /// Family A on the `k`-th pool model.
    pub fn constructive_trial(&self, psi: &CompiledFormula, k: usize) -> (Outcome, Option<Counterexample>) {
        let Some(rho) = self.pool.get(k) else {
            return (Outcome::Skipped, None);
        };
        let w = match self.reduced.witness(rho) {
            Ok(w) => w,
            Err(e) => return (Outcome::Fail, Some(self.counterexample(rho, "witness", e.to_string()))),
        };
        match psi.satisfied_by(&w) {
            Ok(true) => {}
            Ok(false) => {
                return (Outcome::Fail, Some(self.counterexample(rho, "satisfaction", format!("witness {w} violates the reduced formula"))))
            }
            Err(e) => return (Outcome::Fail, Some(self.counterexample(rho, "satisfaction", e.to_string()))),
        }
        match self.reduced.project(&w) {
            Ok(back) if back == *rho => (Outcome::Pass, None),
            Ok(back) => (Outcome::Fail, Some(self.counterexample(rho, "round-trip", format!("witness {w} projects to {back}")))),
            Err(e) => (Outcome::Fail, Some(self.counterexample(rho, "round-trip", e.to_string()))),
        }
    }

    /// One sampled extension for family B, or `None` if sampling produced no word.
    pub fn sample_extension(&self, trial: usize) -> Option<TimedWord> {
        let mut rng = trial_rng(self.config.seed, 1, trial as u64);
        let base = if !self.pool.is_empty() && rng.gen_bool(self.config.model_bias) {
            self.pool[rng.gen_range(0..self.pool.len())].clone()
        } else {
            random_word(&mut rng, self.reduced.sigma(), &self.config.pool.random)
        };
        let w = self.reduced.extend(&base).ok()?;
        let edits = rng.gen_range(1..=self.config.max_edits.max(1));
        self.perturbation.apply(&mut rng, &w, edits)
    }

    /// A guided sample for family B: a model of `ψ` reached by repairing a corrupted
    /// extension of a word that violates `φ`, or `None` if the climb got stuck.
    pub fn guided_extension(&self, scorer: &Scorer, trial: usize) -> Option<TimedWord> {
        let mut rng = trial_rng(self.config.seed, 4, trial as u64);
        let base = (0..50)
            .map(|_| random_word(&mut rng, self.reduced.sigma(), &self.config.pool.random))
            .find(|w| !self.phi_c.satisfied_by(w).unwrap_or(true))?;
        let mut w = self.reduced.extend(&base).ok()?;
        let flips = if self.witnesses.is_empty() { 0 } else { rng.gen_range(1..=2) };
        let mut pts = w.points().to_vec();
        for _ in 0..flips {
            let k = rng.gen_range(0..pts.len());
            let p = &self.witnesses[rng.gen_range(0..self.witnesses.len())];
            if !pts[k].event.remove(p) {
                pts[k].event.insert(p.clone());
            }
        }
        pts.retain(|p| !p.event.is_empty());
        w = TimedWord::strict(pts).ok()?;
        let mut score = scorer.score(&w);
        for _ in 0..self.config.climb_steps {
            if score == 0 {
                break;
            }
            let Some(next) = self.repair.apply(&mut rng, &w, 1) else { continue };
            let s = scorer.score(&next);
            if s <= score {
                w = next;
                score = s;
            }
        }
        (score == 0).then_some(w)
    }

    /// Family B: checks one sampled extension against `psi`.
    pub fn projection_trial(&self, psi: &CompiledFormula, scorer: &Scorer, trial: usize) -> (Outcome, Option<TimedWord>, Option<Counterexample>) {
        let guided = trial_rng(self.config.seed, 5, trial as u64).gen_bool(self.config.guided_share);
        let sample = if guided { self.guided_extension(scorer, trial) } else { self.sample_extension(trial) };
        let Some(w) = sample else {
            return (Outcome::Skipped, None, None);
        };
        if !psi.satisfied_by(&w).unwrap_or(false) {
            return (Outcome::Skipped, Some(w), None);
        }
        if self.reduced.method() == Method::Oversampled && !self.reduced.is_behaviour(&w) {
            return (Outcome::Skipped, Some(w), None);
        }
        match self.reduced.project(&w) {
            Ok(back) => match self.phi_c.satisfied_by(&back) {
                Ok(true) => (Outcome::Pass, Some(w), None),
                _ => {
                    let c = self.counterexample(&w, "projection", format!("projects to {back}, which violates the formula"));
                    (Outcome::Fail, Some(w), Some(c))
                }
            },
            Err(e) => {
                let c = self.counterexample(&w, "projection", format!("satisfies the reduced formula but {e}"));
                (Outcome::Fail, Some(w), Some(c))
            }
        }
    }
}

/// Counts violated conjunct instances of a formula: its top-level conjunction is split,
/// and each conjunct of the form `□ʷ_[0,∞) θ` contributes the number of positions where
/// `θ` fails, every other conjunct one if it fails. The count is zero exactly on models.
pub struct Scorer {
    parts: Vec<(bool, CompiledFormula)>,
}

impl Scorer {
    pub fn new(psi: &Formula) -> Self {
        fn split<'f>(f: &'f Formula, out: &mut Vec<&'f Formula>) {
            match f {
                Formula::And(a, b) => {
                    split(a, out);
                    split(b, out);
                }
                other => out.push(other),
            }
        }
        let mut items = Vec::new();
        split(psi, &mut items);
        let parts = items
            .into_iter()
            .map(|f| match f {
                Formula::WeakAlways(i, body) if *i == Interval::full() => (true, CompiledFormula::new(body)),
                other => (false, CompiledFormula::new(other)),
            })
            .collect();
        Self { parts }
    }

    pub fn score(&self, w: &TimedWord) -> usize {
        if w.is_empty() {
            return usize::MAX;
        }
        self.parts
            .iter()
            .map(|(global, f)| {
                let truth = f.eval_word(w);
                if *global {
                    truth.iter().filter(|t| !**t).count()
                } else {
                    usize::from(!truth[0])
                }
            })
            .sum()
    }
}

/// A generator seeded by `seed` whose stream is determined by `(family, trial)`, so
/// results do not depend on how trials are scheduled.
pub fn trial_rng(seed: u64, family: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ family.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    rng.set_stream(trial);
    rng
}

/// Runs both families with `config.trials` trials each.
pub fn fuzz_with(phi: &Formula, reduced: &Reduced, psi: &Formula, config: FuzzConfig) -> FuzzReport {
    let seed = config.seed;
    let trials = config.trials;
    let bench = Bench::new(phi, reduced, config);
    let psi_c = CompiledFormula::new(psi);
    let scorer = Scorer::new(psi);
    let (constructive, projection) = with_workers(|| {
        let a: Vec<_> = (0..trials).into_par_iter().map(|k| bench.constructive_trial(&psi_c, k)).collect();
        let b: Vec<_> = (0..trials).into_par_iter().map(|k| bench.projection_trial(&psi_c, &scorer, k)).collect();
        (a, b)
    });
    let mut report = FuzzReport {
        formula: print_formula(phi),
        method: reduced.method().name().to_string(),
        seed,
        trials,
        constructive: Tally::default(),
        projection: Tally::default(),
        counterexamples: Vec::new(),
        records: Vec::with_capacity(2 * trials),
    };
    for (k, (o, c)) in constructive.into_iter().enumerate() {
        report.constructive.add(o);
        report.records.push(TrialRecord {
            family: Family::Constructive,
            trial: k,
            outcome: o,
            word: bench.pool.get(k).map(|w| w.to_string()),
        });
        report.counterexamples.extend(c);
    }
    for (k, (o, w, c)) in projection.into_iter().enumerate() {
        report.projection.add(o);
        report.records.push(TrialRecord { family: Family::Projection, trial: k, outcome: o, word: w.map(|w| w.to_string()) });
        report.counterexamples.extend(c);
    }
    report.counterexamples.sort();
    report
}

/// Reduces `φ` over `Σ` with `method` and runs both families with `budget` trials each.
pub fn fuzz_equisat(
    phi: &Formula,
    sigma: &BTreeSet<Prop>,
    method: Method,
    budget: usize,
    seed: u64,
) -> Result<FuzzReport, HarnessError> {
    if sigma.is_empty() {
        return Err(HarnessError::EmptyAlphabet);
    }
    let reduced = Reduced::new(phi, sigma, method)?;
    Ok(fuzz_with(phi, &reduced, &reduced.formula().clone(), FuzzConfig::new(budget, seed)))
}
