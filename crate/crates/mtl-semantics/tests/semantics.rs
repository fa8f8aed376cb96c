use std::collections::BTreeSet;

use mtl_core::formula::*;
use mtl_core::{rat, Formula, Interval, Monotonicity, Point, Time, TimedWord};
use mtl_semantics::*;
use mtl_syntax::{parse_formula, parse_timed_word};
use proptest::prelude::*;

/// Direct transcription of the pointwise semantics, recursing on positions.
fn reference(w: &TimedWord, i: usize, f: &Formula) -> bool {
    let pts = w.points();
    let t = |k: usize| -> &Time { &pts[k - 1].time };
    match f {
        Formula::True => true,
        Formula::False => false,
        Formula::Atom(p) => pts[i - 1].holds(p),
        Formula::Not(a) => !reference(w, i, a),
        Formula::And(a, b) => reference(w, i, a) && reference(w, i, b),
        Formula::Or(a, b) => reference(w, i, a) || reference(w, i, b),
        Formula::Implies(a, b) => !reference(w, i, a) || reference(w, i, b),
        Formula::Until(iv, a, b) => (i + 1..=w.len()).any(|j| {
            iv.contains(&(t(j) - t(i))) && reference(w, j, b) && (i + 1..j).all(|k| reference(w, k, a))
        }),
        Formula::Since(iv, a, b) => (1..i).any(|j| {
            iv.contains(&(t(i) - t(j))) && reference(w, j, b) && (j + 1..i).all(|k| reference(w, k, a))
        }),
        other => reference(w, i, &other.expand()),
    }
}

fn word(text: &str) -> TimedWord {
    parse_timed_word(text).unwrap()
}

fn f(text: &str) -> Formula {
    parse_formula(text).unwrap()
}

#[test]
fn small_word_examples() {
    let rho = word("{a,b}@0.3 {b}@0.7 {a}@1.1");
    assert!(eval(&rho, 1, &f("b U(0,1) a")).unwrap());
    assert!(!eval(&rho, 3, &f("b U[0,inf) a")).unwrap());
    assert!(!eval(&rho, 1, &f("P[0,1] a")).unwrap());
    assert!(satisfies(&rho, &f("F[0,1] a")).unwrap());
    assert!(eval(&rho, 4, &Formula::True).is_err());
    assert!(eval(&rho, 0, &Formula::True).is_err());
}

#[test]
fn single_point_words() {
    let rho = word("{a}@0.5");
    assert!(satisfies(&rho, &atom("a")).unwrap());
    assert!(satisfies(&rho, &last_point()).unwrap());
    assert_eq!(satisfies(&word(""), &Formula::True), Err(SemanticsError::EmptyWord));
}

#[test]
fn weak_words_are_accepted() {
    let rho = word("#weak {a}@0.5 {b}@0.5");
    assert!(satisfies(&rho, &f("F[0,0] b")).unwrap());
    assert!(eval(&rho, 2, &f("P[0,0] a")).unwrap());
}

#[test]
fn bounded_sat_examples() {
    let sa: BTreeSet<String> = ["a".to_string()].into();
    let half = rat(1, 2);
    let two = rat(2, 1);
    assert_eq!(bounded_sat(&f("a & !a"), &sa, 3, &half, &two).unwrap(), None);
    assert_eq!(
        bounded_sat(&f("F[1,1] a"), &sa, 2, &half, &two).unwrap(),
        Some(word("{a}@0 {a}@1"))
    );
    assert_eq!(bounded_sat(&f("a & G false"), &sa, 2, &half, &two).unwrap(), Some(word("{a}@0")));
    assert_eq!(bounded_sat(&Formula::True, &sa, 2, &rat(0, 1), &two), Err(SemanticsError::NonPositiveGrid));
}

/// Brute-force listing of the grid space, sorted by the documented order.
fn sorted_space(sigma: &[&str], max_len: usize, g: usize) -> Vec<TimedWord> {
    let mut events: Vec<Vec<&str>> = Vec::new();
    for mask in 1u32..(1 << sigma.len()) {
        events.push((0..sigma.len()).filter(|b| mask & (1 << b) != 0).map(|b| sigma[b]).collect());
    }
    events.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    let mut keyed: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
    fn rec(n: usize, g: usize, s: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<(usize, Vec<(usize, usize)>)>) {
        if cur.len() == n {
            out.push((n, cur.clone()));
            return;
        }
        let start = if cur.is_empty() { 0 } else { cur.last().unwrap().0 + 1 };
        let end = if cur.is_empty() { 0 } else { g - 1 };
        for t in start..=end {
            for e in 0..s {
                cur.push((t, e));
                rec(n, g, s, cur, out);
                cur.pop();
            }
        }
    }
    for n in 1..=max_len {
        rec(n, g, events.len(), &mut Vec::new(), &mut keyed);
    }
    keyed.sort();
    keyed
        .into_iter()
        .map(|(_, pts)| {
            TimedWord::strict(pts.iter().map(|&(t, e)| Point::new(events[e].iter().copied(), rat(t as i64, 2))).collect())
                .unwrap()
        })
        .collect()
}

#[test]
fn enumeration_order_matches_sorted_listing() {
    let sigma: BTreeSet<String> = ["a".into(), "b".into()].into();
    let space = GridSpace::new(&sigma, 3, &rat(1, 2), &rat(3, 2)).unwrap();
    let listed: Vec<TimedWord> = space.words().collect();
    assert_eq!(listed, sorted_space(&["a", "b"], 3, 4));
}

#[test]
fn parallel_search_returns_first_model() {
    let sigma: BTreeSet<String> = ["a".into(), "b".into()].into();
    let space = GridSpace::new(&sigma, 4, &rat(1, 2), &rat(2, 1)).unwrap();
    for text in ["F[1,2) (a & b)", "G (a -> F(0,1] b) & F b & a", "b & P[1,2) a", "F (b & P[1,2) a)"] {
        let phi = CompiledFormula::new(&f(text));
        let first = bounded_models(&phi, &space).next();
        assert_eq!(space.first_model(&phi), first, "{text}");
    }
}

#[test]
fn strictness_of_zero_interval() {
    let sigma: BTreeSet<String> = ["a".into()].into();
    let space = GridSpace::new(&sigma, 3, &rat(1, 2), &rat(1, 1)).unwrap();
    let phi = f("true U[0,0] true");
    for w in space.words() {
        assert!(eval_positions(&w, &phi).iter().all(|x| !x));
    }
}

#[test]
fn region_examples() {
    let rho = word("{a}@0");
    assert_eq!(region_classify(&rho, 1, "a", &Interval::closed_open(1, 2)).unwrap(), RegionClass::RegionI);
    let rho = word("{a}@0 {b}@0.5 {a}@1 {b}@3.5 {b}@5");
    let i = Interval::closed_open(1, 2);
    assert_eq!(region_classify(&rho, 2, "a", &i).unwrap(), RegionClass::RegionI);
    assert_eq!(region_classify(&rho, 3, "a", &i).unwrap(), RegionClass::Holds);
    assert_eq!(region_classify(&rho, 5, "a", &i).unwrap(), RegionClass::RegionII);
    assert!(region_classify(&rho, 1, "a", &Interval::point(1)).is_err());
}

#[test]
fn region_three_pair() {
    let rho = word("{a}@0 {a}@3 {b}@3.5");
    let i = Interval::closed_open(1, 2);
    assert_eq!(region_classify(&rho, 3, "a", &i).unwrap(), RegionClass::RegionIII { j: 1, k: 2 });
}

/// Exhaustive region check over all grid words of length up to 5 with two propositions.
#[test]
fn region_classification_agrees_with_evaluator() {
    let sigma: BTreeSet<String> = ["a".into(), "b".into()].into();
    let space = GridSpace::new(&sigma, 4, &rat(1, 2), &rat(5, 2)).unwrap();
    let mut intervals = Vec::new();
    for l in 0..=2u64 {
        for u in l..=3 {
            for (lc, rc) in [(true, true), (true, false), (false, true), (false, false)] {
                if let Ok(i) = Interval::new(l, Some(u), lc, rc) {
                    if !i.is_punctual() {
                        intervals.push(i);
                    }
                }
            }
        }
        intervals.push(Interval::at_least(l));
        intervals.push(Interval::greater_than(l));
    }
    let compiled: Vec<_> = intervals.iter().map(|i| CompiledFormula::new(&past_eventually(i.clone(), atom("a")))).collect();
    for w in space.words() {
        for (i, c) in intervals.iter().zip(&compiled) {
            let truth = c.eval_word(&w);
            for pos in 1..=w.len() {
                let r = region_classify(&w, pos, "a", i).unwrap();
                assert_eq!(r == RegionClass::Holds, truth[pos - 1], "{w} pos {pos} {i}");
                if let (RegionClass::RegionIII { j, k }, Some(u)) = (r, i.upper()) {
                    let tj = &w.points()[j - 1].time;
                    let tk = &w.points()[k - 1].time;
                    assert!(tj + rat(u as i64, 1) <= tk + rat(i.lower() as i64, 1));
                }
            }
        }
    }
}

fn arb_interval() -> impl Strategy<Value = Interval> {
    (0u64..3, 0u64..3, any::<bool>(), any::<bool>(), 0u8..4).prop_map(|(l, w, lc, rc, k)| {
        if k == 0 {
            Interval::new(l, None, lc, false).unwrap()
        } else if w == 0 {
            Interval::point(l)
        } else {
            Interval::new(l, Some(l + w), lc, rc).unwrap()
        }
    })
}

fn arb_formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![Just(Formula::True), Just(Formula::False), Just(atom("a")), Just(atom("b"))];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(not),
            inner.clone().prop_map(next),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| implies(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| weak_until(a, b)),
            (arb_interval(), inner.clone(), inner.clone()).prop_map(|(i, a, b)| until(i, a, b)),
            (arb_interval(), inner.clone(), inner.clone()).prop_map(|(i, a, b)| since(i, a, b)),
            (arb_interval(), inner.clone()).prop_map(|(i, a)| always(i, a)),
            (arb_interval(), inner.clone()).prop_map(|(i, a)| historically(i, a)),
            (arb_interval(), inner.clone()).prop_map(|(i, a)| weak_eventually(i, a)),
            (arb_interval(), inner).prop_map(|(i, a)| weak_always(i, a)),
        ]
    })
}

fn arb_word(weak: bool) -> impl Strategy<Value = TimedWord> {
    prop::collection::vec((prop::sample::subsequence(vec!["a", "b"], 1..=2), 0i64..6, prop::sample::select(vec![1i64, 2, 3, 4])), 1..7)
        .prop_map(move |raw| {
            let mut t = rat(0, 1);
            let mut pts = Vec::new();
            for (k, (props, n, d)) in raw.into_iter().enumerate() {
                let step = if !weak && k > 0 && n == 0 { rat(1, d) } else { rat(n, d) };
                t += step;
                pts.push(Point::new(props, t.clone()));
            }
            TimedWord::new(pts, if weak { Monotonicity::Weak } else { Monotonicity::Strict }).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn evaluator_matches_reference(phi in arb_formula(), w in arb_word(false)) {
        let table = eval_positions(&w, &phi);
        for i in 1..=w.len() {
            prop_assert_eq!(table[i - 1], reference(&w, i, &phi), "position {}", i);
        }
    }

    #[test]
    fn evaluator_matches_reference_on_weak_words(phi in arb_formula(), w in arb_word(true)) {
        let table = eval_positions(&w, &phi);
        for i in 1..=w.len() {
            prop_assert_eq!(table[i - 1], reference(&w, i, &phi));
        }
    }

    #[test]
    fn time_shift_invariance(phi in arb_formula(), w in arb_word(false), n in 0i64..9, d in 1i64..5) {
        let shifted = w.time_shift(&rat(n, d)).unwrap();
        prop_assert_eq!(eval_positions(&w, &phi), eval_positions(&shifted, &phi));
    }

    #[test]
    fn always_is_dual_of_eventually(phi in arb_formula(), i in arb_interval(), w in arb_word(false)) {
        let lhs = eval_positions(&w, &always(i.clone(), phi.clone()));
        let rhs = eval_positions(&w, &not(eventually(i, not(phi))));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exact_and_scaled_axes_agree(phi in arb_formula(), w in arb_word(false)) {
        // A huge denominator forces the exact path for the shifted word.
        let big = Time::new(1.into(), num_bigint::BigInt::from(10u8).pow(40));
        let shifted = w.time_shift(&big).unwrap();
        prop_assert_eq!(eval_positions(&w, &phi), eval_positions(&shifted, &phi));
    }
}
