//! Time intervals with natural-number endpoints.

use std::fmt;

use num_rational::BigRational;
use num_traits::Signed;

use crate::error::CoreError;
use crate::time::nat;

/// An interval `<lower, upper>` over the nonnegative reals with endpoints in N ∪ {∞}.
///
/// `upper == None` encodes infinity. Construction validates nonemptiness and that an
/// infinite upper end is right-open.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    lower: u64,
    upper: Option<u64>,
    left_closed: bool,
    right_closed: bool,
}

impl Interval {
    /// Validating constructor.
    pub fn new(
        lower: u64,
        upper: Option<u64>,
        left_closed: bool,
        right_closed: bool,
    ) -> Result<Self, CoreError> {
        match upper {
            None if right_closed => Err(CoreError::ClosedAtInfinity),
            None => Ok(Self { lower, upper, left_closed, right_closed }),
            Some(u) if lower > u => Err(CoreError::EmptyInterval { lower, upper: u }),
            Some(u) if lower == u && !(left_closed && right_closed) => {
                Err(CoreError::EmptyInterval { lower, upper: u })
            }
            Some(_) => Ok(Self { lower, upper, left_closed, right_closed }),
        }
    }

    /// `[0, ∞)`, the interval of the untimed operators.
    pub fn full() -> Self {
        Self { lower: 0, upper: None, left_closed: true, right_closed: false }
    }

    /// `[l, u]`. Panics if empty; intended for constants known to be valid.
    pub fn closed(l: u64, u: u64) -> Self {
        Self::new(l, Some(u), true, true).expect("valid closed interval")
    }

    /// `[l, u)`. Panics if empty.
    pub fn closed_open(l: u64, u: u64) -> Self {
        Self::new(l, Some(u), true, false).expect("valid closed-open interval")
    }

    /// `(l, u]`. Panics if empty.
    pub fn open_closed(l: u64, u: u64) -> Self {
        Self::new(l, Some(u), false, true).expect("valid open-closed interval")
    }

    /// `(l, u)`. Panics if empty.
    pub fn open(l: u64, u: u64) -> Self {
        Self::new(l, Some(u), false, false).expect("valid open interval")
    }

    /// `[l, ∞)`.
    pub fn at_least(l: u64) -> Self {
        Self { lower: l, upper: None, left_closed: true, right_closed: false }
    }

    /// `(l, ∞)`.
    pub fn greater_than(l: u64) -> Self {
        Self { lower: l, upper: None, left_closed: false, right_closed: false }
    }

    /// `[l, l]`.
    pub fn point(l: u64) -> Self {
        Self::closed(l, l)
    }

    pub fn lower(&self) -> u64 {
        self.lower
    }

    /// Upper endpoint; `None` is infinity.
    pub fn upper(&self) -> Option<u64> {
        self.upper
    }

    pub fn left_closed(&self) -> bool {
        self.left_closed
    }

    pub fn right_closed(&self) -> bool {
        self.right_closed
    }

    pub fn is_unbounded(&self) -> bool {
        self.upper.is_none()
    }

    /// True iff the interval is a singleton `[t, t]`.
    pub fn is_punctual(&self) -> bool {
        self.upper == Some(self.lower)
    }

    /// True iff this is `[0, ∞)`.
    pub fn is_full(&self) -> bool {
        *self == Self::full()
    }

    pub fn contains_zero(&self) -> bool {
        self.lower == 0 && self.left_closed
    }

    /// Membership of a rational distance.
    pub fn contains(&self, d: &BigRational) -> bool {
        !self.below(d) && !self.above(d)
    }

    /// True iff `d` lies strictly to the left of the interval.
    pub fn below(&self, d: &BigRational) -> bool {
        let l = nat(self.lower);
        if self.left_closed {
            *d < l
        } else {
            *d <= l
        }
    }

    /// True iff `d` lies strictly to the right of the interval.
    pub fn above(&self, d: &BigRational) -> bool {
        match self.upper {
            None => false,
            Some(u) => {
                let u = nat(u);
                if self.right_closed {
                    *d > u
                } else {
                    *d >= u
                }
            }
        }
    }

    /// Membership test that rejects negative distances outright.
    pub fn contains_nonneg(&self, d: &BigRational) -> bool {
        !d.is_negative() && self.contains(d)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.left_closed { '[' } else { '(' };
        let close = if self.right_closed { ']' } else { ')' };
        match self.upper {
            Some(u) => write!(f, "{open}{},{u}{close}", self.lower),
            None => write!(f, "{open}{},inf{close}", self.lower),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::time::rat;

    #[test]
    fn rejects_empty_and_closed_infinity() {
        assert!(Interval::new(3, Some(2), true, true).is_err());
        assert!(Interval::new(2, Some(2), true, false).is_err());
        assert!(Interval::new(2, None, true, true).is_err());
        assert!(Interval::new(2, Some(2), true, true).unwrap().is_punctual());
    }

    #[test]
    fn membership_respects_brackets() {
        let i = Interval::closed_open(1, 2);
        assert!(i.contains(&rat(1, 1)));
        assert!(i.contains(&rat(3, 2)));
        assert!(!i.contains(&rat(2, 1)));
        let j = Interval::open_closed(1, 2);
        assert!(!j.contains(&rat(1, 1)));
        assert!(j.contains(&rat(2, 1)));
        assert!(Interval::greater_than(0).contains(&rat(1, 100)));
        assert!(!Interval::greater_than(0).contains(&rat(0, 1)));
    }

    #[test]
    fn display_uses_ascii_infinity() {
        assert_eq!(Interval::full().to_string(), "[0,inf)");
        assert_eq!(Interval::open(0, 1).to_string(), "(0,1)");
    }
}
