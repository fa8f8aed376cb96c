//! The MTL abstract syntax tree, canonical expansion and structural queries.

use std::collections::BTreeSet;

use crate::interval::Interval;

/// Proposition names.
pub type Prop = String;

/// An MTL formula.
///
/// `Or` and `Implies` are first-class nodes so that size accounting sees the formula as
/// written. The derived temporal constructors expand canonically (see [`Formula::expand`]).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    True,
    False,
    Atom(Prop),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    /// `left U_I right`, strict.
    Until(Interval, Box<Formula>, Box<Formula>),
    /// `left S_I right`, strict.
    Since(Interval, Box<Formula>, Box<Formula>),
    /// `◇_I φ = true U_I φ`.
    Eventually(Interval, Box<Formula>),
    /// `⋄̄_I φ = true S_I φ`.
    PastEventually(Interval, Box<Formula>),
    /// `□_I φ = ¬◇_I ¬φ`.
    Always(Interval, Box<Formula>),
    /// `⊟_I φ = ¬⋄̄_I ¬φ`.
    Historically(Interval, Box<Formula>),
    /// `◇ʷ_I φ = (φ if 0 ∈ I) ∨ ◇_I φ`.
    WeakEventually(Interval, Box<Formula>),
    /// `□ʷ_I φ = (φ if 0 ∈ I) ∧ □_I φ`.
    WeakAlways(Interval, Box<Formula>),
    /// `a Uʷ b = b ∨ (a ∧ a U b)`.
    WeakUntil(Box<Formula>, Box<Formula>),
    /// `O φ = false U φ`, true iff a next point exists and satisfies φ.
    Next(Box<Formula>),
}

/// Fragments of MTL ordered from tightest to loosest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Fragment {
    /// No Since operator under canonical expansion.
    UIOnly,
    /// Since occurs, every Since interval is non-punctual.
    UISnp,
    /// Since occurs with some punctual interval, every Until interval is non-punctual.
    UnpSI,
    /// Both directions carry punctual intervals.
    FullMtl,
}

impl Fragment {
    pub fn tag(self) -> &'static str {
        match self {
            Fragment::UIOnly => "U_I_only",
            Fragment::UISnp => "U_I_S_np",
            Fragment::UnpSI => "U_np_S_I",
            Fragment::FullMtl => "full_MTL",
        }
    }
}

impl std::fmt::Display for Fragment {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

impl Formula {
    /// Immediate subformulas, left to right.
    pub fn children(&self) -> Vec<&Formula> {
        use Formula::*;
        match self {
            True | False | Atom(_) => vec![],
            Not(a)
            | Eventually(_, a)
            | PastEventually(_, a)
            | Always(_, a)
            | Historically(_, a)
            | WeakEventually(_, a)
            | WeakAlways(_, a)
            | Next(a) => vec![a],
            And(a, b) | Or(a, b) | Implies(a, b) | WeakUntil(a, b) => vec![a, b],
            Until(_, a, b) | Since(_, a, b) => vec![a, b],
        }
    }

    /// Rebuilds this node with new children (same arity and order as [`Formula::children`]).
    pub fn with_children(&self, mut kids: Vec<Formula>) -> Formula {
        use Formula::*;
        let mut next = || Box::new(kids.remove(0));
        match self {
            True | False | Atom(_) => self.clone(),
            Not(_) => Not(next()),
            Eventually(i, _) => Eventually(i.clone(), next()),
            PastEventually(i, _) => PastEventually(i.clone(), next()),
            Always(i, _) => Always(i.clone(), next()),
            Historically(i, _) => Historically(i.clone(), next()),
            WeakEventually(i, _) => WeakEventually(i.clone(), next()),
            WeakAlways(i, _) => WeakAlways(i.clone(), next()),
            Next(_) => Next(next()),
            And(..) => {
                let a = next();
                And(a, next())
            }
            Or(..) => {
                let a = next();
                Or(a, next())
            }
            Implies(..) => {
                let a = next();
                Implies(a, next())
            }
            WeakUntil(..) => {
                let a = next();
                WeakUntil(a, next())
            }
            Until(i, ..) => {
                let a = next();
                Until(i.clone(), a, next())
            }
            Since(i, ..) => {
                let a = next();
                Since(i.clone(), a, next())
            }
        }
    }

    /// Bottom-up structural map.
    pub fn map_bottom_up(&self, f: &mut dyn FnMut(Formula) -> Formula) -> Formula {
        let kids: Vec<Formula> = self.children().into_iter().map(|c| c.map_bottom_up(f)).collect();
        f(self.with_children(kids))
    }

    /// True for every node kind that is a temporal modality (Until, Since and derived forms).
    pub fn is_modal(&self) -> bool {
        use Formula::*;
        !matches!(self, True | False | Atom(_) | Not(_) | And(..) | Or(..) | Implies(..))
    }

    /// True for past modalities (Since, ⋄̄, ⊟).
    pub fn is_past(&self) -> bool {
        matches!(self, Formula::Since(..) | Formula::PastEventually(..) | Formula::Historically(..))
    }

    /// Canonical expansion into `True, False, Atom, Not, And, Or, Until, Since`.
    ///
    /// `Implies(a, b)` becomes `Or(Not(a), b)`. Expansion is idempotent.
    pub fn expand(&self) -> Formula {
        use Formula::*;
        match self {
            True | False | Atom(_) => self.clone(),
            Not(a) => not(a.expand()),
            And(a, b) => and(a.expand(), b.expand()),
            Or(a, b) => or(a.expand(), b.expand()),
            Implies(a, b) => or(not(a.expand()), b.expand()),
            Until(i, a, b) => until(i.clone(), a.expand(), b.expand()),
            Since(i, a, b) => since(i.clone(), a.expand(), b.expand()),
            Eventually(i, a) => until(i.clone(), True, a.expand()),
            PastEventually(i, a) => since(i.clone(), True, a.expand()),
            Always(i, a) => not(until(i.clone(), True, not(a.expand()))),
            Historically(i, a) => not(since(i.clone(), True, not(a.expand()))),
            WeakEventually(i, a) => {
                let e = a.expand();
                let strict = until(i.clone(), True, e.clone());
                if i.contains_zero() {
                    or(e, strict)
                } else {
                    strict
                }
            }
            WeakAlways(i, a) => {
                let e = a.expand();
                let strict = not(until(i.clone(), True, not(e.clone())));
                if i.contains_zero() {
                    and(e, strict)
                } else {
                    strict
                }
            }
            WeakUntil(a, b) => {
                let (a, b) = (a.expand(), b.expand());
                or(b.clone(), and(a.clone(), until(Interval::full(), a, b)))
            }
            Next(a) => until(Interval::full(), False, a.expand()),
        }
    }

    /// Set of atoms occurring in the formula.
    pub fn propositions(&self) -> BTreeSet<Prop> {
        let mut out = BTreeSet::new();
        self.collect_props(&mut out);
        out
    }

    fn collect_props(&self, out: &mut BTreeSet<Prop>) {
        if let Formula::Atom(p) = self {
            out.insert(p.clone());
        }
        for c in self.children() {
            c.collect_props(out);
        }
    }

    /// Number of AST nodes, counted on the formula as written.
    pub fn node_count(&self) -> usize {
        1 + self.children().iter().map(|c| c.node_count()).sum::<usize>()
    }

    /// Number of temporal modalities, counted on the formula as written.
    pub fn modal_count(&self) -> usize {
        usize::from(self.is_modal()) + self.children().iter().map(|c| c.modal_count()).sum::<usize>()
    }

    /// Visits every node of the canonical expansion that carries an interval.
    fn expanded_intervals(&self) -> (Vec<Interval>, Vec<Interval>) {
        fn walk(f: &Formula, fut: &mut Vec<Interval>, past: &mut Vec<Interval>) {
            match f {
                Formula::Until(i, ..) => fut.push(i.clone()),
                Formula::Since(i, ..) => past.push(i.clone()),
                _ => {}
            }
            for c in f.children() {
                walk(c, fut, past);
            }
        }
        let (mut fut, mut past) = (vec![], vec![]);
        walk(&self.expand(), &mut fut, &mut past);
        (fut, past)
    }

    /// Tightest fragment tag, computed on the canonical expansion.
    pub fn fragment(&self) -> Fragment {
        let (fut, past) = self.expanded_intervals();
        if past.is_empty() {
            Fragment::UIOnly
        } else if past.iter().all(|i| !i.is_punctual()) {
            Fragment::UISnp
        } else if fut.iter().all(|i| !i.is_punctual()) {
            Fragment::UnpSI
        } else {
            Fragment::FullMtl
        }
    }

    /// True iff no interval anywhere is punctual.
    pub fn is_mitl(&self) -> bool {
        let (fut, past) = self.expanded_intervals();
        fut.iter().chain(past.iter()).all(|i| !i.is_punctual())
    }

    /// True iff the canonical expansion contains no Since node.
    pub fn is_future_only(&self) -> bool {
        self.fragment() == Fragment::UIOnly
    }
}

/// Alias of [`Formula::fragment`].
pub fn classify_fragment(f: &Formula) -> Fragment {
    f.fragment()
}

/// Alias of [`Formula::propositions`].
pub fn propositions_of(f: &Formula) -> BTreeSet<Prop> {
    f.propositions()
}

// Builders. These keep call sites that assemble long constructions readable.

pub fn atom(p: impl Into<Prop>) -> Formula {
    Formula::Atom(p.into())
}

pub fn not(a: Formula) -> Formula {
    Formula::Not(Box::new(a))
}

pub fn and(a: Formula, b: Formula) -> Formula {
    Formula::And(Box::new(a), Box::new(b))
}

pub fn or(a: Formula, b: Formula) -> Formula {
    Formula::Or(Box::new(a), Box::new(b))
}

pub fn implies(a: Formula, b: Formula) -> Formula {
    Formula::Implies(Box::new(a), Box::new(b))
}

/// `a ↔ b` as `(a → b) ∧ (b → a)`.
pub fn iff(a: Formula, b: Formula) -> Formula {
    and(implies(a.clone(), b.clone()), implies(b, a))
}

/// Right-nested conjunction; `true` when empty.
pub fn and_all(items: impl IntoIterator<Item = Formula>) -> Formula {
    let mut v: Vec<Formula> = items.into_iter().collect();
    match v.pop() {
        None => Formula::True,
        Some(last) => v.into_iter().rev().fold(last, |acc, f| and(f, acc)),
    }
}

/// Right-nested disjunction; `false` when empty.
pub fn or_all(items: impl IntoIterator<Item = Formula>) -> Formula {
    let mut v: Vec<Formula> = items.into_iter().collect();
    match v.pop() {
        None => Formula::False,
        Some(last) => v.into_iter().rev().fold(last, |acc, f| or(f, acc)),
    }
}

pub fn until(i: Interval, a: Formula, b: Formula) -> Formula {
    Formula::Until(i, Box::new(a), Box::new(b))
}

pub fn since(i: Interval, a: Formula, b: Formula) -> Formula {
    Formula::Since(i, Box::new(a), Box::new(b))
}

pub fn eventually(i: Interval, a: Formula) -> Formula {
    Formula::Eventually(i, Box::new(a))
}

pub fn past_eventually(i: Interval, a: Formula) -> Formula {
    Formula::PastEventually(i, Box::new(a))
}

pub fn always(i: Interval, a: Formula) -> Formula {
    Formula::Always(i, Box::new(a))
}

pub fn historically(i: Interval, a: Formula) -> Formula {
    Formula::Historically(i, Box::new(a))
}

pub fn weak_eventually(i: Interval, a: Formula) -> Formula {
    Formula::WeakEventually(i, Box::new(a))
}

pub fn weak_always(i: Interval, a: Formula) -> Formula {
    Formula::WeakAlways(i, Box::new(a))
}

pub fn weak_until(a: Formula, b: Formula) -> Formula {
    Formula::WeakUntil(Box::new(a), Box::new(b))
}

pub fn next(a: Formula) -> Formula {
    Formula::Next(Box::new(a))
}

/// `□⊥`: true exactly at the last point.
pub fn last_point() -> Formula {
    always(Interval::full(), Formula::False)
}

/// Untimed `□ʷ φ`.
pub fn globally(a: Formula) -> Formula {
    weak_always(Interval::full(), a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sec3b() -> Formula {
        until(
            Interval::closed(0, 3),
            atom("a"),
            since(Interval::full(), atom("c"), past_eventually(Interval::closed(0, 1), atom("d"))),
        )
    }

    #[test]
    fn fragment_examples() {
        assert_eq!(until(Interval::closed(2, 3), atom("a"), atom("b")).fragment(), Fragment::UIOnly);
        assert_eq!(sec3b().fragment(), Fragment::UISnp);
        let separating = eventually(
            Interval::open(0, 1),
            and(atom("a"), not(eventually(Interval::point(1), or(atom("a"), atom("b"))))),
        );
        assert_eq!(separating.fragment(), Fragment::UIOnly);
        assert!(!separating.is_mitl());
        let punct_past = since(Interval::point(1), atom("a"), atom("b"));
        assert_eq!(punct_past.fragment(), Fragment::UnpSI);
        assert_eq!(and(punct_past, eventually(Interval::point(2), atom("c"))).fragment(), Fragment::FullMtl);
    }

    #[test]
    fn propositions_examples() {
        assert!(Formula::True.propositions().is_empty());
        let p: Vec<_> = sec3b().propositions().into_iter().collect();
        assert_eq!(p, vec!["a", "c", "d"]);
    }

    #[test]
    fn expansion_is_idempotent_on_derived_forms() {
        let f = and(
            weak_always(Interval::closed_open(0, 2), atom("a")),
            weak_until(next(atom("b")), historically(Interval::open(1, 3), atom("c"))),
        );
        let once = f.expand();
        assert_eq!(once.expand(), once);
        assert_eq!(f.modal_count(), 4);
    }

    #[test]
    fn and_all_nests_right() {
        assert_eq!(and_all(vec![atom("a"), atom("b"), atom("c")]), and(atom("a"), and(atom("b"), atom("c"))));
        assert_eq!(and_all(vec![]), Formula::True);
        assert_eq!(or_all(vec![atom("a")]), atom("a"));
    }
}
