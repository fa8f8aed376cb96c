use std::collections::BTreeSet;

use mtl_core::{AlphabetSplit, Monotonicity, Point, Prop, TimedWord};

use crate::error::ProjectionError;
use crate::project::{check_alphabet, delete_non_action, is_action, simple_project};

fn check_disjoint(sigma: &BTreeSet<Prop>, x1: &BTreeSet<Prop>, x2: &BTreeSet<Prop>) -> Result<(), ProjectionError> {
    if let Some(p) = x1.intersection(x2).next() {
        return Err(ProjectionError::OverlappingAlphabets(p.clone()));
    }
    AlphabetSplit::new(sigma.clone(), x1.clone())?;
    AlphabetSplit::new(sigma.clone(), x2.clone())?;
    Ok(())
}

fn union(a: &Point, b: &Point) -> Point {
    Point { event: a.event.union(&b.event).cloned().collect(), time: a.time.clone() }
}

/// `ρ1 ⊕ ρ2`: the pointwise union of two simple extensions of the same base word.
pub fn compose_simple(
    w1: &TimedWord,
    w2: &TimedWord,
    sigma: &BTreeSet<Prop>,
    x1: &BTreeSet<Prop>,
    x2: &BTreeSet<Prop>,
) -> Result<TimedWord, ProjectionError> {
    check_disjoint(sigma, x1, x2)?;
    let s1 = AlphabetSplit::new(sigma.clone(), x1.clone())?;
    let s2 = AlphabetSplit::new(sigma.clone(), x2.clone())?;
    let base1 = simple_project(w1, &s1)?;
    let base2 = simple_project(w2, &s2)?;
    if base1.points() != base2.points() {
        return Err(ProjectionError::ProjectionMismatch(format!("{base1} vs {base2}")));
    }
    let pts = w1.points().iter().zip(w2.points()).map(|(a, b)| union(a, b)).collect();
    Ok(TimedWord::new(pts, w1.monotonicity())?)
}

/// A word cut at its action points: `gaps[0] action[0] gaps[1] … action[n-1] gaps[n]`.
struct Segments {
    actions: Vec<Point>,
    gaps: Vec<Vec<Point>>,
}

fn segments(w: &TimedWord, sigma: &BTreeSet<Prop>) -> Segments {
    let mut actions = Vec::new();
    let mut gaps = vec![Vec::new()];
    for p in w.points() {
        if is_action(p, sigma) {
            actions.push(p.clone());
            gaps.push(Vec::new());
        } else {
            gaps.last_mut().expect("at least one gap").push(p.clone());
        }
    }
    Segments { actions, gaps }
}

/// Every order-preserving interleaving of two runs of non-action points. Points with
/// equal timestamps may also be fused into one point; when `strict` they must be.
fn interleavings(a: &[Point], b: &[Point], strict: bool) -> Vec<Vec<Point>> {
    fn go(a: &[Point], b: &[Point], strict: bool, cur: &mut Vec<Point>, out: &mut Vec<Vec<Point>>) {
        match (a.first(), b.first()) {
            (None, None) => out.push(cur.clone()),
            (Some(x), None) => {
                cur.push(x.clone());
                go(&a[1..], b, strict, cur, out);
                cur.pop();
            }
            (None, Some(y)) => {
                cur.push(y.clone());
                go(a, &b[1..], strict, cur, out);
                cur.pop();
            }
            (Some(x), Some(y)) => {
                let tie = x.time == y.time;
                if tie {
                    cur.push(union(x, y));
                    go(&a[1..], &b[1..], strict, cur, out);
                    cur.pop();
                }
                if !(strict && tie) {
                    if x.time <= y.time {
                        cur.push(x.clone());
                        go(&a[1..], b, strict, cur, out);
                        cur.pop();
                    }
                    if y.time <= x.time {
                        cur.push(y.clone());
                        go(a, &b[1..], strict, cur, out);
                        cur.pop();
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    go(a, b, strict, &mut Vec::new(), &mut out);
    out
}

/// `ρ1 ⊞ ρ2`: every word `ρ` over `Σ ∪ X1 ∪ X2` with `ρ↓X1 = ρ2` and `ρ↓X2 = ρ1`.
///
/// When both inputs are strictly monotonic only strictly monotonic results are kept, so
/// non-action points of the two inputs sharing a timestamp are fused and the result is
/// a single word. Otherwise all interleavings are returned, with and without fusing
/// equal-time points.
pub fn compose_oversampled(
    w1: &TimedWord,
    w2: &TimedWord,
    sigma: &BTreeSet<Prop>,
    x1: &BTreeSet<Prop>,
    x2: &BTreeSet<Prop>,
) -> Result<Vec<TimedWord>, ProjectionError> {
    check_disjoint(sigma, x1, x2)?;
    check_alphabet(w1, &sigma.union(x1).cloned().collect())?;
    check_alphabet(w2, &sigma.union(x2).cloned().collect())?;
    let (base1, _) = delete_non_action(w1, sigma)?;
    let (base2, _) = delete_non_action(w2, sigma)?;
    if base1.points() != base2.points() {
        return Err(ProjectionError::ProjectionMismatch(format!("{base1} vs {base2}")));
    }
    let strict = w1.is_strict() && w2.is_strict();
    let mode = if strict { Monotonicity::Strict } else { Monotonicity::Weak };
    let s1 = segments(w1, sigma);
    let s2 = segments(w2, sigma);
    let mut partial: Vec<Vec<Point>> = vec![Vec::new()];
    for (k, (g1, g2)) in s1.gaps.iter().zip(&s2.gaps).enumerate() {
        let options = interleavings(g1, g2, strict);
        let mut next = Vec::with_capacity(partial.len() * options.len());
        for prefix in &partial {
            for opt in &options {
                let mut w = prefix.clone();
                w.extend(opt.iter().cloned());
                if let (Some(a), Some(b)) = (s1.actions.get(k), s2.actions.get(k)) {
                    w.push(union(a, b));
                }
                next.push(w);
            }
        }
        partial = next;
    }
    let mut out: Vec<TimedWord> = Vec::with_capacity(partial.len());
    for pts in partial {
        let w = TimedWord::new(pts, mode)?;
        if !out.contains(&w) {
            out.push(w);
        }
    }
    Ok(out)
}
