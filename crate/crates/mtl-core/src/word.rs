//! Finite timed words with exact rational timestamps.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::CoreError;
use crate::formula::Prop;
use crate::time::{format_time, Time};

/// Whether consecutive timestamps must strictly increase or may repeat.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Monotonicity {
    Strict,
    Weak,
}

impl Monotonicity {
    fn name(self) -> &'static str {
        match self {
            Monotonicity::Strict => "strictly increasing",
            Monotonicity::Weak => "weakly increasing",
        }
    }
}

/// One point of a timed word: the set of propositions holding there and its timestamp.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub event: BTreeSet<Prop>,
    pub time: Time,
}

impl Point {
    pub fn new<I, S>(props: I, time: Time) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<Prop>,
    {
        Self { event: props.into_iter().map(Into::into).collect(), time }
    }

    pub fn holds(&self, p: &str) -> bool {
        self.event.contains(p)
    }
}

/// A finite timed word. Positions are reported 1-based in user-facing APIs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TimedWord {
    points: Vec<Point>,
    monotonicity: Monotonicity,
}

impl TimedWord {
    /// Validating constructor: nonempty events, nonnegative and monotone timestamps.
    pub fn new(points: Vec<Point>, monotonicity: Monotonicity) -> Result<Self, CoreError> {
        for (idx, p) in points.iter().enumerate() {
            if p.event.is_empty() {
                return Err(CoreError::EmptyEvent { position: idx + 1 });
            }
            if p.time.is_negative() {
                return Err(CoreError::NegativeTime { position: idx + 1 });
            }
            if idx > 0 {
                let prev = &points[idx - 1].time;
                let ok = match monotonicity {
                    Monotonicity::Strict => p.time > *prev,
                    Monotonicity::Weak => p.time >= *prev,
                };
                if !ok {
                    return Err(CoreError::NonMonotone { position: idx + 1, mode: monotonicity.name() });
                }
            }
        }
        Ok(Self { points, monotonicity })
    }

    /// Strictly monotonic word.
    pub fn strict(points: Vec<Point>) -> Result<Self, CoreError> {
        Self::new(points, Monotonicity::Strict)
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    pub fn monotonicity(&self) -> Monotonicity {
        self.monotonicity
    }

    pub fn is_strict(&self) -> bool {
        self.monotonicity == Monotonicity::Strict
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Point at 1-based position `i`.
    pub fn at(&self, i: usize) -> Option<&Point> {
        i.checked_sub(1).and_then(|k| self.points.get(k))
    }

    pub fn first_time(&self) -> Option<&Time> {
        self.points.first().map(|p| &p.time)
    }

    pub fn last_time(&self) -> Option<&Time> {
        self.points.last().map(|p| &p.time)
    }

    /// Union of all events.
    pub fn propositions(&self) -> BTreeSet<Prop> {
        self.points.iter().flat_map(|p| p.event.iter().cloned()).collect()
    }

    /// Shifts every timestamp by `delta`; fails if a timestamp would become negative.
    pub fn time_shift(&self, delta: &Time) -> Result<TimedWord, CoreError> {
        let mut points = Vec::with_capacity(self.points.len());
        for (idx, p) in self.points.iter().enumerate() {
            let t = &p.time + delta;
            if t.is_negative() {
                return Err(CoreError::NegativeShift { position: idx + 1 });
            }
            points.push(Point { event: p.event.clone(), time: t });
        }
        Ok(TimedWord { points, monotonicity: self.monotonicity })
    }

    /// Shifts the word so that its first timestamp is 0.
    pub fn anchored(&self) -> TimedWord {
        match self.first_time() {
            Some(t) if !t.is_zero() => self.time_shift(&-t.clone()).expect("anchoring never goes negative"),
            _ => self.clone(),
        }
    }
}

/// Alias of [`TimedWord::time_shift`].
pub fn time_shift(w: &TimedWord, delta: &Time) -> Result<TimedWord, CoreError> {
    w.time_shift(delta)
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let props: Vec<&str> = self.event.iter().map(String::as_str).collect();
        write!(f, "{{{}}}@{}", props.join(","), format_time(&self.time))
    }
}

impl fmt::Display for TimedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monotonicity == Monotonicity::Weak {
            f.write_str("#weak")?;
            if !self.points.is_empty() {
                f.write_str(" ")?;
            }
        }
        let parts: Vec<String> = self.points.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::time::rat;

    fn pt(props: &[&str], n: i64, d: i64) -> Point {
        Point::new(props.iter().copied(), rat(n, d))
    }

    #[test]
    fn validation() {
        assert!(TimedWord::strict(vec![pt(&["a"], 1, 2), pt(&["b"], 1, 2)]).is_err());
        assert!(TimedWord::new(vec![pt(&["a"], 1, 2), pt(&["b"], 1, 2)], Monotonicity::Weak).is_ok());
        assert_eq!(
            TimedWord::strict(vec![pt(&[], 1, 10)]),
            Err(CoreError::EmptyEvent { position: 1 })
        );
        assert!(TimedWord::strict(vec![pt(&["a"], -1, 10)]).is_err());
    }

    #[test]
    fn shift_examples() {
        let w = TimedWord::strict(vec![pt(&["a"], 3, 10), pt(&["b"], 7, 10)]).unwrap();
        let s = w.time_shift(&rat(-3, 10)).unwrap();
        assert_eq!(s, TimedWord::strict(vec![pt(&["a"], 0, 1), pt(&["b"], 4, 10)]).unwrap());
        assert_eq!(w.time_shift(&rat(0, 1)).unwrap(), w);
        let v = TimedWord::strict(vec![pt(&["a"], 2, 10), pt(&["b"], 1, 1)]).unwrap();
        assert_eq!(
            v.time_shift(&rat(1, 1)).unwrap(),
            TimedWord::strict(vec![pt(&["a"], 12, 10), pt(&["b"], 2, 1)]).unwrap()
        );
        assert!(w.time_shift(&rat(-1, 2)).is_err());
    }

    #[test]
    fn display_round_shape() {
        let w = TimedWord::strict(vec![pt(&["b", "a"], 3, 10), pt(&["b"], 7, 10)]).unwrap();
        assert_eq!(w.to_string(), "{a,b}@0.3 {b}@0.7");
    }
}
