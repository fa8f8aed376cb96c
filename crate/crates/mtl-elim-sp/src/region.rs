use std::fmt;

use mtl_core::time::format_time;
use mtl_core::{Interval, Time};

use crate::error::SpError;

/// Bracket-dependent parameters of the bounded elimination of `⋄̄⟨l,u⟩ a`.
///
/// For consecutive `a`-points `j < k` the points where `b` must fail lie between the
/// end of the window of `j` and the start of the window of `k`. Whether that stretch is
/// nonempty, and which of its ends are included, depends on the brackets of the
/// interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpShape {
    interval: Interval,
    l: u64,
    u: u64,
}

impl SpShape {
    pub fn new(interval: &Interval) -> Result<Self, SpError> {
        let u = match interval.upper() {
            Some(u) => u,
            None => return Err(SpError::UnboundedInterval(interval.to_string())),
        };
        if interval.is_punctual() {
            return Err(SpError::PunctualInterval(interval.to_string()));
        }
        Ok(Self { interval: interval.clone(), l: interval.lower(), u })
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    pub fn lower(&self) -> u64 {
        self.l
    }

    pub fn upper(&self) -> u64 {
        self.u
    }

    fn lc(&self) -> bool {
        self.interval.left_closed()
    }

    fn rc(&self) -> bool {
        self.interval.right_closed()
    }

    /// Both ends open: the stretch between windows is then closed at both ends.
    pub fn is_open(&self) -> bool {
        !self.lc() && !self.rc()
    }

    /// Gaps after which the next `a` carries the other bit.
    pub fn flag_gap(&self) -> Interval {
        Interval::new(self.u - self.l, None, self.is_open(), false).expect("right-open unbounded interval")
    }

    /// Distances within which the next `a` keeps the bit.
    pub fn same_bit_window(&self) -> Interval {
        Interval::new(0, Some(self.u - self.l), true, !self.is_open()).expect("u > l")
    }

    /// Gaps handled by the unbounded-distance markers.
    pub fn far_gap(&self) -> Interval {
        Interval::new(self.u, None, self.is_open(), false).expect("right-open unbounded interval")
    }

    /// Unit pieces of the middle case, as `(d, piece)`: a gap in `piece` yields
    /// over-approximations of length `d`. There are exactly `l` of them.
    pub fn pieces(&self) -> Vec<(u64, Interval)> {
        (self.u - self.l..self.u)
            .map(|t| {
                let piece = if self.is_open() {
                    Interval::closed_open(t, t + 1)
                } else {
                    Interval::open_closed(t, t + 1)
                };
                (t + 1 + self.l - self.u, piece)
            })
            .collect()
    }

    /// The `d` of the piece containing `gap`, if the gap falls in the middle case.
    pub fn piece_of(&self, gap: &Time) -> Option<u64> {
        self.pieces().into_iter().find(|(_, p)| p.contains(gap)).map(|(d, _)| d)
    }

    /// Over-approximation measured forward from the earlier `a`: `⟨u, u+d⟩`.
    pub fn i2(&self, d: u64) -> Interval {
        Interval::new(self.u, Some(self.u + d), !self.rc(), !self.lc() && self.rc()).expect("d ≥ 1")
    }

    /// Over-approximation measured forward from the later `a`: `⟨l−d, l⟩`.
    pub fn i1(&self, d: u64) -> Interval {
        Interval::new(self.l - d, Some(self.l), !self.rc(), !self.lc()).expect("1 ≤ d ≤ l")
    }

    /// `[0, l⟩`: the stretch after an `a` that precedes its window. `None` when `l = 0`.
    pub fn before_window(&self) -> Option<Interval> {
        (self.l > 0).then(|| Interval::new(0, Some(self.l), true, !self.lc()).expect("l > 0"))
    }

    /// `[0, u⟩`: from an `a` to the end of its window.
    pub fn through_window(&self) -> Interval {
        Interval::new(0, Some(self.u), true, self.rc()).expect("u > 0")
    }

    /// `⟨u, ∞)`: after the end of the window.
    pub fn after_window(&self) -> Interval {
        Interval::new(self.u, None, !self.rc(), false).expect("right-open unbounded interval")
    }
}

/// An interval of rational time points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TimeInterval {
    pub lo: Time,
    pub hi: Time,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl TimeInterval {
    /// `t + i` for a bounded interval `i`.
    pub fn shifted(i: &Interval, t: &Time) -> Self {
        let lo = t + Time::from_integer(i.lower().into());
        let hi = t + Time::from_integer(i.upper().expect("bounded interval").into());
        Self { lo, hi, lo_closed: i.left_closed(), hi_closed: i.right_closed() }
    }

    pub fn contains(&self, t: &Time) -> bool {
        let above = if self.lo_closed { *t >= self.lo } else { *t > self.lo };
        let below = if self.hi_closed { *t <= self.hi } else { *t < self.hi };
        above && below
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi || (self.lo == self.hi && !(self.lo_closed && self.hi_closed))
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let (lo, lo_closed) = match self.lo.cmp(&other.lo) {
            std::cmp::Ordering::Greater => (self.lo.clone(), self.lo_closed),
            std::cmp::Ordering::Less => (other.lo.clone(), other.lo_closed),
            std::cmp::Ordering::Equal => (self.lo.clone(), self.lo_closed && other.lo_closed),
        };
        let (hi, hi_closed) = match self.hi.cmp(&other.hi) {
            std::cmp::Ordering::Less => (self.hi.clone(), self.hi_closed),
            std::cmp::Ordering::Greater => (other.hi.clone(), other.hi_closed),
            std::cmp::Ordering::Equal => (self.hi.clone(), self.hi_closed && other.hi_closed),
        };
        Self { lo, hi, lo_closed, hi_closed }
    }
}

impl fmt::Display for TimeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{},{}{}",
            if self.lo_closed { '[' } else { '(' },
            format_time(&self.lo),
            format_time(&self.hi),
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

/// The two over-approximations of the stretch between the windows of consecutive
/// `a`-points at `τ_j < τ_k` whose gap falls in the middle case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionIntervalPair {
    pub d: u64,
    /// Measured from `τ_k`: `[τ_k + l − d, τ_k + l)` for `[l,u)`.
    pub i1: TimeInterval,
    /// Measured from `τ_j`: `[τ_j + u, τ_j + u + d)` for `[l,u)`.
    pub i2: TimeInterval,
    /// The stretch itself: `[τ_j + u, τ_k + l)` for `[l,u)`.
    pub region: TimeInterval,
}

/// Computes the over-approximations for a middle-case gap.
pub fn compute_region_pair(tj: &Time, tk: &Time, interval: &Interval) -> Result<RegionIntervalPair, SpError> {
    let shape = SpShape::new(interval)?;
    let gap = tk - tj;
    let d = shape.piece_of(&gap).ok_or_else(|| SpError::OutOfCase {
        gap: format_time(&gap),
        interval: interval.to_string(),
    })?;
    let region = TimeInterval {
        lo: tj + Time::from_integer(shape.u.into()),
        hi: tk + Time::from_integer(shape.l.into()),
        lo_closed: !shape.rc(),
        hi_closed: !shape.lc(),
    };
    Ok(RegionIntervalPair {
        d,
        i1: TimeInterval::shifted(&shape.i1(d), tk),
        i2: TimeInterval::shifted(&shape.i2(d), tj),
        region,
    })
}
