//! Mutation tests: drop one marking group and look for a projection counterexample.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use mtl_core::{Formula, Prop};
use mtl_semantics::{with_workers, CompiledFormula};

use crate::error::HarnessError;
use crate::fuzz::{Bench, Counterexample, FuzzConfig, Outcome, Scorer};
use crate::reduction::{Method, Reduced};

/// The top-level marking groups of the bounded elimination used by `method`.
pub fn mark_groups(method: Method) -> Vec<&'static str> {
    match method {
        Method::Simple => mtl_elim_sp::SP_MARK_GROUPS.to_vec(),
        Method::Oversampled => mtl_elim_os::MARK_GROUPS.to_vec(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MutationOutcome {
    pub method: String,
    pub group: String,
    /// Corpus formulas whose reduction contains the group.
    pub formulas: usize,
    pub trials: usize,
    pub counterexample: Option<Counterexample>,
}

impl MutationOutcome {
    pub fn detected(&self) -> bool {
        self.counterexample.is_some()
    }
}

const BATCH: usize = 64;

/// Drops `group` from every bounded elimination and runs projection trials, spread
/// evenly over the formulas of `corpus` that contain the group, until one fails or
/// `budget` trials are spent.
pub fn mutation_search(
    corpus: &[Formula],
    sigma: &BTreeSet<Prop>,
    method: Method,
    group: &str,
    budget: usize,
    seed: u64,
) -> Result<MutationOutcome, HarnessError> {
    let mut targets = Vec::new();
    for phi in corpus {
        let reduced = Reduced::new(phi, sigma, method)?;
        if reduced.mark_groups().contains(group) {
            let mutated = reduced.without_group(group);
            targets.push((phi, reduced, mutated));
        }
    }
    let mut outcome = MutationOutcome {
        method: method.name().to_string(),
        group: group.to_string(),
        formulas: targets.len(),
        trials: 0,
        counterexample: None,
    };
    if targets.is_empty() {
        return Ok(outcome);
    }
    let share = budget / targets.len();
    let benches: Vec<(Bench, CompiledFormula, Scorer)> = targets
        .iter()
        .map(|(phi, reduced, mutated)| {
            let mut config = FuzzConfig::new(100, seed);
            config.max_edits = 4;
            (Bench::new(phi, reduced, config), CompiledFormula::new(mutated), Scorer::new(mutated))
        })
        .collect();
    let mut start = 0;
    while start < share {
        let end = (start + BATCH).min(share);
        for (bench, psi, scorer) in &benches {
            let found = with_workers(|| {
                (start..end)
                    .into_par_iter()
                    .map(|k| bench.projection_trial(psi, scorer, k))
                    .filter_map(|(o, _, c)| if o == Outcome::Fail { c } else { None })
                    .min()
            });
            outcome.trials += end - start;
            if let Some(c) = found {
                outcome.counterexample = Some(c);
                return Ok(outcome);
            }
        }
        start = end;
    }
    Ok(outcome)
}
