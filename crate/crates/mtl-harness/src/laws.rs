//! Random checks of the decomposition identities for both compositions.

use std::collections::BTreeSet;

use rand::Rng;
use serde::Serialize;

use mtl_core::{rat, AlphabetSplit, Monotonicity, Point, Prop, TimedWord};
use mtl_projections::{compose_oversampled, compose_simple, oversampled_project, simple_project};

use crate::error::HarnessError;
use crate::fuzz::trial_rng;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub simple_trials: usize,
    pub simple_failures: usize,
    pub oversampled_trials: usize,
    pub oversampled_failures: usize,
    pub first_failure: Option<String>,
}

impl LawReport {
    pub fn failures(&self) -> usize {
        self.simple_failures + self.oversampled_failures
    }
}

fn props(items: &[&str]) -> BTreeSet<Prop> {
    items.iter().map(|s| s.to_string()).collect()
}

fn pick(rng: &mut impl Rng, items: &[&str], at_least_one: bool) -> BTreeSet<Prop> {
    loop {
        let ev = props(&items.iter().copied().filter(|_| rng.gen_bool(0.5)).collect::<Vec<_>>());
        if !at_least_one || !ev.is_empty() {
            return ev;
        }
    }
}

/// A random word over `{a, b} ∪ {c, e} ∪ {d}`. Interior points are non-action points
/// with probability `non_action`; weak words may repeat timestamps.
fn random_extension(rng: &mut impl Rng, non_action: f64, weak: bool) -> TimedWord {
    let n = rng.gen_range(1..=7);
    let mut t = rat(0, 1);
    let mut pts = Vec::with_capacity(n);
    for k in 0..n {
        if k > 0 {
            let step = rng.gen_range(if weak { 0..4 } else { 1..4 });
            t += rat(step, 4);
        }
        let action = k == 0 || k + 1 == n || !rng.gen_bool(non_action);
        let event = if action {
            let mut ev = pick(rng, &["a", "b"], true);
            ev.extend(pick(rng, &["c", "d", "e"], false));
            ev
        } else {
            pick(rng, &["c", "d", "e"], true)
        };
        pts.push(Point { event, time: t.clone() });
    }
    let mode = if weak { Monotonicity::Weak } else { Monotonicity::Strict };
    TimedWord::new(pts, mode).expect("nondecreasing timestamps")
}

/// Checks `ζ = (ζ∖X2) ⊕ (ζ∖X1)` on `trials` random simple extensions and, on `trials`
/// random oversampled behaviours, that `(ζ↓X2) ⊞ (ζ↓X1)` is `{ζ}` for strictly
/// monotonic `ζ` and contains `ζ` for weakly monotonic `ζ`.
pub fn composition_laws(trials: usize, seed: u64) -> Result<LawReport, HarnessError> {
    let sigma = props(&["a", "b"]);
    let (x1, x2) = (props(&["c", "e"]), props(&["d"]));
    let with = |x: &BTreeSet<Prop>| -> BTreeSet<Prop> { sigma.union(x).cloned().collect() };
    let mut report = LawReport::default();
    for k in 0..trials {
        let mut rng = trial_rng(seed, 2, k as u64);
        let z = random_extension(&mut rng, 0.0, false);
        let left = simple_project(&z, &AlphabetSplit::new(with(&x1), x2.clone())?)?;
        let right = simple_project(&z, &AlphabetSplit::new(with(&x2), x1.clone())?)?;
        report.simple_trials += 1;
        if compose_simple(&left, &right, &sigma, &x1, &x2)? != z {
            report.simple_failures += 1;
            report.first_failure.get_or_insert_with(|| format!("simple: {z}"));
        }
    }
    for k in 0..trials {
        let mut rng = trial_rng(seed, 3, k as u64);
        let weak = rng.gen_bool(0.3);
        let z = random_extension(&mut rng, 0.4, weak);
        let left = oversampled_project(&z, &AlphabetSplit::new(with(&x1), x2.clone())?)?.0;
        let right = oversampled_project(&z, &AlphabetSplit::new(with(&x2), x1.clone())?)?.0;
        let all = compose_oversampled(&left, &right, &sigma, &x1, &x2)?;
        report.oversampled_trials += 1;
        let ok = if z.is_strict() { all == vec![z.clone()] } else { all.contains(&z) };
        if !ok {
            report.oversampled_failures += 1;
            report.first_failure.get_or_insert_with(|| format!("oversampled: {z}"));
        }
    }
    Ok(report)
}
