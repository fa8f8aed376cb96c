//! Classification of positions relative to `⋄̄_I α`.

use mtl_core::{Interval, TimedWord};

use crate::error::SemanticsError;

/// Where a position sits with respect to the `α`-points in its strict past.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegionClass {
    /// Some earlier `α`-point lies at a distance in `I`.
    Holds,
    /// Every earlier `α`-point is too recent (or there is none).
    RegionI,
    /// Every earlier `α`-point is too old.
    RegionII,
    /// Strictly between the consecutive `α`-points `j < k` (1-based): `j` is too old and
    /// `k` too recent.
    RegionIII { j: usize, k: usize },
}

impl RegionClass {
    pub fn tag(self) -> &'static str {
        match self {
            RegionClass::Holds => "HOLDS",
            RegionClass::RegionI => "REGION_I",
            RegionClass::RegionII => "REGION_II",
            RegionClass::RegionIII { .. } => "REGION_III",
        }
    }
}

/// Classifies the 1-based position `i` of `w` for `⋄̄_I α`.
///
/// Only `α`-points strictly before `i` are considered. Their distances to `τ_i` decrease
/// along the word, so they fall into a prefix that is above `I`, a middle part inside
/// `I` and a suffix below `I`. An empty middle part yields one of the three regions.
pub fn region_classify(w: &TimedWord, i: usize, alpha: &str, interval: &Interval) -> Result<RegionClass, SemanticsError> {
    if interval.is_punctual() {
        return Err(SemanticsError::PunctualInterval(interval.to_string()));
    }
    if i == 0 || i > w.len() {
        return Err(SemanticsError::PositionOutOfRange { position: i, len: w.len() });
    }
    let pts = w.points();
    let ti = &pts[i - 1].time;
    let past: Vec<usize> = (1..i).filter(|&j| pts[j - 1].holds(alpha)).collect();
    let (first, last) = match (past.first(), past.last()) {
        (Some(&f), Some(&l)) => (f, l),
        _ => return Ok(RegionClass::RegionI),
    };
    let dist = |j: usize| ti - &pts[j - 1].time;
    if past.iter().any(|&j| interval.contains(&dist(j))) {
        return Ok(RegionClass::Holds);
    }
    if interval.below(&dist(first)) {
        return Ok(RegionClass::RegionI);
    }
    if interval.above(&dist(last)) {
        return Ok(RegionClass::RegionII);
    }
    let pair = past
        .windows(2)
        .find(|p| interval.above(&dist(p[0])) && interval.below(&dist(p[1])))
        .expect("distances straddle the interval without meeting it");
    Ok(RegionClass::RegionIII { j: pair[0], k: pair[1] })
}
