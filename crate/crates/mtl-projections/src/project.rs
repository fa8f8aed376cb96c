use std::collections::BTreeSet;

use mtl_core::{AlphabetSplit, Point, Prop, TimedWord};

use crate::error::ProjectionError;

/// The strictly increasing map from positions of a projected word to positions of the
/// oversampled word it came from. Both sides are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionMap {
    f: Vec<usize>,
}

impl ProjectionMap {
    pub fn new(f: Vec<usize>) -> Self {
        Self { f }
    }

    /// `f(i)` for a 1-based position `i` of the projected word.
    pub fn image(&self, i: usize) -> Option<usize> {
        i.checked_sub(1).and_then(|k| self.f.get(k).copied())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.f
    }

    pub fn len(&self) -> usize {
        self.f.len()
    }

    pub fn is_empty(&self) -> bool {
        self.f.is_empty()
    }
}

pub(crate) fn check_alphabet(w: &TimedWord, allowed: &BTreeSet<Prop>) -> Result<(), ProjectionError> {
    for (k, p) in w.points().iter().enumerate() {
        if let Some(x) = p.event.iter().find(|x| !allowed.contains(*x)) {
            return Err(ProjectionError::ForeignProposition { position: k + 1, prop: x.clone() });
        }
    }
    Ok(())
}

pub(crate) fn is_action(p: &Point, sigma: &BTreeSet<Prop>) -> bool {
    p.event.iter().any(|x| sigma.contains(x))
}

pub(crate) fn restrict(p: &Point, sigma: &BTreeSet<Prop>) -> Point {
    Point { event: p.event.intersection(sigma).cloned().collect(), time: p.time.clone() }
}

/// True iff every event meets `Σ`.
pub fn is_simple_extension(w: &TimedWord, split: &AlphabetSplit) -> Result<bool, ProjectionError> {
    check_alphabet(w, &split.all())?;
    Ok(w.points().iter().all(|p| is_action(p, split.sigma())))
}

/// Erases `X` from every event. Defined only on simple extensions.
pub fn simple_project(w: &TimedWord, split: &AlphabetSplit) -> Result<TimedWord, ProjectionError> {
    check_alphabet(w, &split.all())?;
    let mut pts = Vec::with_capacity(w.len());
    for (k, p) in w.points().iter().enumerate() {
        if !is_action(p, split.sigma()) {
            return Err(ProjectionError::NotSimpleExtension { position: k + 1 });
        }
        pts.push(restrict(p, split.sigma()));
    }
    Ok(TimedWord::new(pts, w.monotonicity())?)
}

/// True iff the first and last events meet `Σ`.
pub fn is_oversampled_behaviour(w: &TimedWord, split: &AlphabetSplit) -> Result<bool, ProjectionError> {
    check_alphabet(w, &split.all())?;
    let sigma = split.sigma();
    Ok(match (w.points().first(), w.points().last()) {
        (Some(first), Some(last)) => is_action(first, sigma) && is_action(last, sigma),
        _ => false,
    })
}

/// Deletes the non-action points and erases `X` from the rest.
pub fn oversampled_project(w: &TimedWord, split: &AlphabetSplit) -> Result<(TimedWord, ProjectionMap), ProjectionError> {
    if !is_oversampled_behaviour(w, split)? {
        return Err(ProjectionError::NotOversampledBehaviour);
    }
    let (word, map) = delete_non_action(w, split.sigma())?;
    Ok((word, map))
}

/// Projection onto `Σ` without the first/last requirement.
pub(crate) fn delete_non_action(w: &TimedWord, sigma: &BTreeSet<Prop>) -> Result<(TimedWord, ProjectionMap), ProjectionError> {
    let mut pts = Vec::new();
    let mut f = Vec::new();
    for (k, p) in w.points().iter().enumerate() {
        if is_action(p, sigma) {
            pts.push(restrict(p, sigma));
            f.push(k + 1);
        }
    }
    Ok((TimedWord::new(pts, w.monotonicity())?, ProjectionMap::new(f)))
}
