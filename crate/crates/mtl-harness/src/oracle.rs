//! Exhaustive comparison of region classification with the evaluator.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use mtl_core::formula::{atom, past_eventually};
use mtl_core::{Interval, Prop, Time, TimedWord};
use mtl_semantics::{region_classify, with_workers, CompiledFormula, GridSpace, RegionClass};

use crate::error::HarnessError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub words: usize,
    pub intervals: usize,
    pub checks: usize,
    pub disagreements: usize,
    /// `(word, position, interval)` of the first disagreement in enumeration order.
    pub first: Option<(String, usize, String)>,
}

/// Every non-punctual bounded interval `⟨l,u⟩` with `l < u ≤ max_const`, in all four
/// bracket combinations.
pub fn bounded_intervals(max_const: u64) -> Vec<Interval> {
    let mut out = Vec::new();
    for l in 0..=max_const {
        for u in l + 1..=max_const {
            for (lc, rc) in [(true, true), (true, false), (false, true), (false, false)] {
                out.push(Interval::new(l, Some(u), lc, rc).expect("l < u"));
            }
        }
    }
    out
}

/// Checks, for every strictly monotonic word over `sigma` with at most `max_len`
/// points on the grid `0, grid, …, horizon`, every position and every interval, that `region_classify` answers HOLDS exactly where `⋄̄_I α` holds.
pub fn region_oracle(
    sigma: &BTreeSet<Prop>,
    alpha: &str,
    max_len: usize,
    grid: &Time,
    horizon: &Time,
    max_const: u64,
) -> Result<OracleReport, HarnessError> {
    let space = GridSpace::new(sigma, max_len, grid, horizon)?;
    let mut words: Vec<TimedWord> = Vec::new();
    for w in space.words() {
        let mut shift = Time::from_integer(0.into());
        while w.last_time().is_some_and(|t| t + &shift <= *horizon) {
            words.push(w.time_shift(&shift)?);
            shift += grid;
        }
    }
    let intervals = bounded_intervals(max_const);
    let compiled: Vec<CompiledFormula> =
        intervals.iter().map(|i| CompiledFormula::new(&past_eventually(i.clone(), atom(alpha)))).collect();
    let per_word: Vec<(usize, Vec<(usize, usize)>)> = with_workers(|| {
        words
            .par_iter()
            .map(|w| {
                let mut checks = 0;
                let mut bad = Vec::new();
                for (k, (i, f)) in intervals.iter().zip(&compiled).enumerate() {
                    let truth = f.eval_word(w);
                    for (pos, holds) in truth.iter().enumerate() {
                        checks += 1;
                        let class = region_classify(w, pos + 1, alpha, i);
                        if !matches!(class, Ok(c) if (c == RegionClass::Holds) == *holds) {
                            bad.push((pos + 1, k));
                        }
                    }
                }
                (checks, bad)
            })
            .collect()
    });
    let mut report = OracleReport {
        words: words.len(),
        intervals: intervals.len(),
        checks: 0,
        disagreements: 0,
        first: None,
    };
    for (w, (checks, bad)) in words.iter().zip(per_word) {
        report.checks += checks;
        report.disagreements += bad.len();
        if report.first.is_none() {
            if let Some(&(pos, k)) = bad.first() {
                report.first = Some((w.to_string(), pos, intervals[k].to_string()));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use mtl_core::rat;

    #[test]
    fn small_space_agrees() {
        let sigma: BTreeSet<Prop> = ["a", "w"].iter().map(|s| s.to_string()).collect();
        let r = region_oracle(&sigma, "a", 3, &rat(1, 2), &rat(2, 1), 2).unwrap();
        assert_eq!(r.intervals, 12);
        assert!(r.checks > 0);
        assert_eq!(r.disagreements, 0, "{:?}", r.first);
    }
}
