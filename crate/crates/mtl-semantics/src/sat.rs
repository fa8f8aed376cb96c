//! Exhaustive search for models over a finite grid of timestamps.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

use mtl_core::{Formula, Point, Prop, Time, TimedWord};

use crate::error::SemanticsError;
use crate::eval::CompiledFormula;
use crate::parallel::with_workers;

/// The finite space of strictly monotonic words searched by [`bounded_sat`].
///
/// Words start at time 0, use timestamps `0, grid, 2·grid, …` up to `horizon`, carry
/// nonempty events over `Σ` and have at most `max_len` points. They are ordered by
/// length, then lexicographically by `(time, event)` per point, where events are
/// ordered by size and then lexicographically.
#[derive(Clone, Debug)]
pub struct GridSpace {
    grid: Time,
    points: usize,
    events: Vec<BTreeSet<Prop>>,
    max_len: usize,
}

impl GridSpace {
    pub fn new(sigma: &BTreeSet<Prop>, max_len: usize, grid: &Time, horizon: &Time) -> Result<Self, SemanticsError> {
        if !grid.is_positive() {
            return Err(SemanticsError::NonPositiveGrid);
        }
        if max_len == 0 {
            return Err(SemanticsError::ZeroLength);
        }
        let points = if horizon.is_negative() {
            0
        } else {
            (horizon / grid).floor().to_integer().to_usize().map_or(usize::MAX, |s| s.saturating_add(1))
        };
        Ok(Self { grid: grid.clone(), points, events: nonempty_subsets(sigma), max_len })
    }

    /// Number of timestamps available.
    pub fn grid_points(&self) -> usize {
        self.points
    }

    fn build(&self, ts: &[usize], es: &[usize]) -> TimedWord {
        let pts = ts
            .iter()
            .zip(es)
            .map(|(&t, &e)| Point { event: self.events[e].clone(), time: &self.grid * BigRational::from_integer(t.into()) })
            .collect();
        TimedWord::strict(pts).expect("grid words are strictly monotonic with nonempty events")
    }

    fn longest(&self) -> usize {
        if self.events.is_empty() {
            0
        } else {
            self.max_len.min(self.points)
        }
    }

    /// Iterates every word of the space in order.
    pub fn words(&self) -> GridWords<'_> {
        let state = (self.longest() >= 1).then(|| (vec![0], vec![0]));
        GridWords { space: self, state }
    }

    /// First word in order that satisfies `f`, searched in parallel.
    pub fn first_model(&self, f: &CompiledFormula) -> Option<TimedWord> {
        for n in 1..=self.longest() {
            let found = with_workers(|| {
                self.prefixes(n).into_par_iter().find_map_first(|(ts, es)| {
                    let (mut ts, mut es) = (ts, es);
                    self.search(n, &mut ts, &mut es, f)
                })
            });
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Prefixes of length `min(n, 2)`, in order.
    fn prefixes(&self, n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
        let s = self.events.len();
        let g = self.points;
        let mut out = Vec::new();
        for e1 in 0..s {
            if n == 1 {
                out.push((vec![0], vec![e1]));
                continue;
            }
            for t2 in 1..=(g - (n - 1)) {
                for e2 in 0..s {
                    out.push((vec![0, t2], vec![e1, e2]));
                }
            }
        }
        out
    }

    fn search(&self, n: usize, ts: &mut Vec<usize>, es: &mut Vec<usize>, f: &CompiledFormula) -> Option<TimedWord> {
        if ts.len() == n {
            let w = self.build(ts, es);
            return f.eval_word(&w)[0].then_some(w);
        }
        let remaining = n - ts.len();
        let start = ts.last().map_or(0, |t| t + 1);
        let end = self.points - remaining;
        for t in start..=end {
            for e in 0..self.events.len() {
                ts.push(t);
                es.push(e);
                if let Some(w) = self.search(n, ts, es, f) {
                    return Some(w);
                }
                ts.pop();
                es.pop();
            }
        }
        None
    }
}

/// Iterator over the words of a [`GridSpace`], in order.
pub struct GridWords<'a> {
    space: &'a GridSpace,
    state: Option<(Vec<usize>, Vec<usize>)>,
}

impl Iterator for GridWords<'_> {
    type Item = TimedWord;

    fn next(&mut self) -> Option<TimedWord> {
        let (ts, es) = self.state.take()?;
        let word = self.space.build(&ts, &es);
        self.state = advance(self.space, ts, es);
        Some(word)
    }
}

fn advance(space: &GridSpace, mut ts: Vec<usize>, mut es: Vec<usize>) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = ts.len();
    let s = space.events.len();
    let g = space.points;
    for p in (0..n).rev() {
        if es[p] + 1 < s {
            es[p] += 1;
        } else if p > 0 && ts[p] + (n - p) < g {
            ts[p] += 1;
            es[p] = 0;
        } else {
            continue;
        }
        for q in p + 1..n {
            ts[q] = ts[q - 1] + 1;
            es[q] = 0;
        }
        return Some((ts, es));
    }
    (n < space.longest()).then(|| ((0..=n).collect(), vec![0; n + 1]))
}

fn nonempty_subsets(sigma: &BTreeSet<Prop>) -> Vec<BTreeSet<Prop>> {
    let items: Vec<&Prop> = sigma.iter().collect();
    let m = items.len().min(16);
    let mut subsets: Vec<Vec<&Prop>> = (1u32..(1 << m))
        .map(|mask| (0..m).filter(|b| mask & (1 << b) != 0).map(|b| items[b]).collect())
        .collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subsets.into_iter().map(|v| v.into_iter().cloned().collect()).collect()
}

/// First model of `f` in the order of [`GridSpace`], or `None` if the space has none.
pub fn bounded_sat(
    f: &Formula,
    sigma: &BTreeSet<Prop>,
    max_len: usize,
    grid: &Time,
    horizon: &Time,
) -> Result<Option<TimedWord>, SemanticsError> {
    let space = GridSpace::new(sigma, max_len, grid, horizon)?;
    Ok(space.first_model(&CompiledFormula::new(f)))
}

/// Every model of `f` in the space, in order.
pub fn bounded_models<'a>(f: &'a CompiledFormula, space: &'a GridSpace) -> impl Iterator<Item = TimedWord> + 'a {
    space.words().filter(move |w| f.eval_word(w)[0])
}
