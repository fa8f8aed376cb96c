//! Word pairs separating the past-free, non-punctual-past and non-punctual fragments.
//!
//! Each case yields a formula and two words on which it takes different truth values,
//! while the words cannot be told apart in the smaller fragment.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use mtl_core::{rat, Formula, Point, Time, TimedWord};
use mtl_semantics::satisfies;
use mtl_syntax::parse_formula;

use crate::error::HarnessError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SeparationCase {
    /// Punctual future against non-punctual future with timed past.
    I,
    /// Punctual past against timed future with non-punctual past.
    II,
    /// Non-punctual past with a lower bound against untimed past.
    III,
}

impl SeparationCase {
    pub const ALL: [SeparationCase; 3] = [SeparationCase::I, SeparationCase::II, SeparationCase::III];

    pub fn name(self) -> &'static str {
        match self {
            SeparationCase::I => "i",
            SeparationCase::II => "ii",
            SeparationCase::III => "iii",
        }
    }

    /// The truth values the formula takes on `(w1, w2)`.
    pub fn expected(self) -> (bool, bool) {
        match self {
            SeparationCase::I => (true, false),
            SeparationCase::II => (false, true),
            SeparationCase::III => (true, false),
        }
    }

    pub fn formula(self) -> Formula {
        let text = match self {
            SeparationCase::I => "F(0,1) (a & !F[1,1] (a | b))",
            SeparationCase::II => "F (b & !P[1,1] (a | b))",
            SeparationCase::III => "F(1,2) (a & !P(1,2) a)",
        };
        parse_formula(text).expect("fixed formula parses")
    }
}

impl fmt::Display for SeparationCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeparationCase {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "i" | "1" => Ok(SeparationCase::I),
            "ii" | "2" => Ok(SeparationCase::II),
            "iii" | "3" => Ok(SeparationCase::III),
            other => Err(HarnessError::InvalidParameters(format!("unknown case `{other}` (expected i, ii or iii)"))),
        }
    }
}

/// Parameters of the word families. `index` defaults to `⌈n/2⌉`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorParams {
    pub n: usize,
    pub delta: Time,
    pub kappa: Time,
    pub epsilon: Time,
    pub index: Option<usize>,
}

impl Default for VectorParams {
    fn default() -> Self {
        Self { n: 5, delta: rat(1, 10), kappa: rat(1, 20), epsilon: rat(1, 100), index: None }
    }
}

impl VectorParams {
    pub fn index(&self) -> usize {
        self.index.unwrap_or(self.n.div_ceil(2))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationVectors {
    pub case: SeparationCase,
    pub formula: Formula,
    pub w1: TimedWord,
    pub w2: TimedWord,
}

impl SeparationVectors {
    /// Truth values of the formula on `(w1, w2)`.
    pub fn verdict(&self) -> Result<(bool, bool), HarnessError> {
        Ok((satisfies(&self.w1, &self.formula)?, satisfies(&self.w2, &self.formula)?))
    }

    /// Whether the evaluator reproduces [`SeparationCase::expected`].
    pub fn reproduces(&self) -> Result<bool, HarnessError> {
        Ok(self.verdict()? == self.case.expected())
    }
}

fn word(points: Vec<(&str, Time)>) -> Result<TimedWord, HarnessError> {
    let mut pts: Vec<Point> = points.into_iter().map(|(p, t)| Point::new([p], t)).collect();
    pts.sort_by(|x, y| x.time.cmp(&y.time));
    TimedWord::strict(pts).map_err(|e| HarnessError::InvalidParameters(e.to_string()))
}

fn invalid(msg: &str) -> HarnessError {
    HarnessError::InvalidParameters(msg.to_string())
}

/// Builds the formula and the word pair of `case`.
///
/// Cases i and ii use `a` at `kδ` and `b` at `1 + kδ` for `k = 1..n`, with extra points
/// shifted back by `κ` at the distinguished index `i`. In case i, `w1` lacks the
/// `b` at `1 + (i−1)δ`, so the `a` at `(i−1)δ` has nothing exactly one unit later.
/// In case ii, `w2` lacks the `a` at `iδ − κ`, so the `b` at `1 + iδ − κ` has nothing
/// exactly one unit earlier. Case iii uses the ε-clusters after 0.5, 0.9 and 1.6,
/// with an extra `a` at 1.5 in `w1` only.
pub fn separation_vectors(case: SeparationCase, params: &VectorParams) -> Result<SeparationVectors, HarnessError> {
    let n = params.n;
    if n == 0 {
        return Err(invalid("n must be positive"));
    }
    let k = |j: usize| rat(j as i64, 1);
    let one = rat(1, 1);
    let (w1, w2) = match case {
        SeparationCase::I | SeparationCase::II => {
            let (d, kappa) = (&params.delta, &params.kappa);
            let zero = rat(0, 1);
            if !(kappa > &zero && kappa < d) {
                return Err(invalid("need 0 < κ < δ"));
            }
            if k(n) * d >= one {
                return Err(invalid("need n·δ < 1"));
            }
            let i = params.index();
            if i < 2 || i > n {
                return Err(invalid("need 2 ≤ i ≤ n"));
            }
            let shifted = k(i) * d - kappa;
            let a_full: Vec<(&str, Time)> =
                (1..=n).map(|j| ("a", k(j) * d)).chain(std::iter::once(("a", shifted.clone()))).collect();
            let b_full: Vec<(&str, Time)> =
                (1..=n).map(|j| ("b", &one + k(j) * d)).chain(std::iter::once(("b", &one + &shifted))).collect();
            if case == SeparationCase::I {
                let missing = &one + k(i - 1) * d;
                let b_short: Vec<(&str, Time)> = b_full.iter().filter(|(_, t)| *t != missing).cloned().collect();
                (word([a_full.clone(), b_short].concat())?, word([a_full, b_full].concat())?)
            } else {
                let a_short: Vec<(&str, Time)> = a_full.iter().filter(|(_, t)| *t != shifted).cloned().collect();
                (word([a_full, b_full.clone()].concat())?, word([a_short, b_full].concat())?)
            }
        }
        SeparationCase::III => {
            let e = &params.epsilon;
            if e <= &rat(0, 1) {
                return Err(invalid("need ε > 0"));
            }
            if rat(9, 10) + k(n) * e >= rat(3, 2) {
                return Err(invalid("need 0.9 + n·ε < 1.5"));
            }
            if rat(1, 2) + k(n) * e >= rat(9, 10) + e {
                return Err(invalid("need 0.5 + n·ε < 0.9 + ε"));
            }
            let cluster = |base: Time| (1..=n).map(move |j| ("a", &base + k(j) * e)).collect::<Vec<_>>();
            let w_1 = [cluster(rat(1, 2)), cluster(rat(9, 10))].concat();
            let w_2 = [vec![("a", rat(3, 2))], cluster(rat(8, 5))].concat();
            (word([w_1.clone(), w_2].concat())?, word([w_1, cluster(rat(8, 5))].concat())?)
        }
    };
    Ok(SeparationVectors { case, formula: case.formula(), w1, w2 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_index_is_the_middle() {
        assert_eq!(VectorParams::default().index(), 3);
        assert_eq!(VectorParams { n: 4, ..VectorParams::default() }.index(), 2);
    }

    #[test]
    fn words_have_the_described_points() {
        let v = separation_vectors(SeparationCase::I, &VectorParams::default()).unwrap();
        assert_eq!(v.w2.len(), 12);
        assert_eq!(v.w1.len(), 11);
        assert!(v.w2.points().iter().any(|p| p.time == rat(12, 10)));
        assert!(!v.w1.points().iter().any(|p| p.time == rat(12, 10)));
        let v = separation_vectors(SeparationCase::II, &VectorParams::default()).unwrap();
        assert!(v.w1.points().iter().any(|p| p.time == rat(25, 100) && p.holds("a")));
        assert!(!v.w2.points().iter().any(|p| p.time == rat(25, 100)));
        let v = separation_vectors(SeparationCase::III, &VectorParams { n: 4, ..VectorParams::default() }).unwrap();
        assert_eq!(v.w1.len(), 13);
        assert_eq!(v.w2.len(), 12);
    }

    #[test]
    fn parameter_checks() {
        let bad = VectorParams { kappa: rat(1, 5), ..VectorParams::default() };
        assert!(separation_vectors(SeparationCase::I, &bad).is_err());
        let bad = VectorParams { n: 10, ..VectorParams::default() };
        assert!(separation_vectors(SeparationCase::II, &bad).is_err());
        let bad = VectorParams { index: Some(1), ..VectorParams::default() };
        assert!(separation_vectors(SeparationCase::I, &bad).is_err());
        let bad = VectorParams { n: 70, ..VectorParams::default() };
        assert!(separation_vectors(SeparationCase::III, &bad).is_err());
    }
}
