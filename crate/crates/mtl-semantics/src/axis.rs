//! Timestamp distances compared against integer interval bounds.
//!
//! Words whose timestamps share a small common denominator are rescaled to machine
//! integers; anything larger falls back to exact big rationals.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use mtl_core::{Interval, TimedWord};

pub(crate) enum Axis {
    Scaled { t: Vec<i128>, scale: i128 },
    Exact { t: Vec<BigRational> },
}

impl Axis {
    /// `max_bound` is the largest finite interval endpoint that will be queried.
    pub(crate) fn new(word: &TimedWord, max_bound: u64) -> Self {
        Self::scaled(word, max_bound).unwrap_or_else(|| Axis::Exact {
            t: word.points().iter().map(|p| p.time.clone()).collect(),
        })
    }

    fn scaled(word: &TimedWord, max_bound: u64) -> Option<Self> {
        let mut scale = BigInt::one();
        for p in word.points() {
            scale = scale.lcm(p.time.denom());
        }
        let s = scale.to_i128()?;
        i128::from(max_bound).checked_mul(s)?.checked_mul(2)?;
        let mut t = Vec::with_capacity(word.len());
        for p in word.points() {
            let v = (p.time.numer() * (&scale / p.time.denom())).to_i128()?;
            v.checked_mul(2)?;
            t.push(v);
        }
        Some(Axis::Scaled { t, scale: s })
    }

    /// Where `τ[later] − τ[earlier]` (0-based indices) falls relative to `i`:
    /// `Less` below it, `Equal` inside, `Greater` above it.
    pub(crate) fn locate(&self, earlier: usize, later: usize, i: &Interval) -> Ordering {
        match self {
            Axis::Scaled { t, scale } => {
                let d = t[later] - t[earlier];
                let l = i128::from(i.lower()) * scale;
                let below = if i.left_closed() { d < l } else { d <= l };
                if below {
                    return Ordering::Less;
                }
                match i.upper() {
                    None => Ordering::Equal,
                    Some(u) => {
                        let u = i128::from(u) * scale;
                        let above = if i.right_closed() { d > u } else { d >= u };
                        if above {
                            Ordering::Greater
                        } else {
                            Ordering::Equal
                        }
                    }
                }
            }
            Axis::Exact { t } => {
                let d = &t[later] - &t[earlier];
                if i.below(&d) {
                    Ordering::Less
                } else if i.above(&d) {
                    Ordering::Greater
                } else {
                    Ordering::Equal
                }
            }
        }
    }
}
