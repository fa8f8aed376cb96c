use std::collections::BTreeSet;

use mtl_core::formula::*;
use mtl_core::{rat, Formula, FreshNames, Interval, Point, Prop, TimedWord};
use mtl_normal_forms::*;
use mtl_projections::compose_simple;
use mtl_semantics::{eval_positions, satisfies};
use mtl_syntax::{parse_formula, parse_timed_word};
use proptest::prelude::*;

fn f(text: &str) -> Formula {
    parse_formula(text).unwrap()
}

fn word(text: &str) -> TimedWord {
    parse_timed_word(text).unwrap()
}

fn set(items: &[&str]) -> BTreeSet<Prop> {
    items.iter().map(|s| s.to_string()).collect()
}

#[test]
fn flatten_nested_since_example() {
    let phi = f("a U[0,3] (c S (P[0,1] d))");
    let flat = flatten(&phi, FlattenPolicy::PastOnly, &mut FreshNames::default());
    assert_eq!(flat.skeleton, f("a U[0,3] w1"));
    assert_eq!(
        flat.defs,
        vec![
            TemporalDefinition::new("w2", f("P[0,1] d"), DefRole::Modal),
            TemporalDefinition::new("w1", f("c S w2"), DefRole::Modal),
        ]
    );
    assert_eq!(flat.witnesses, set(&["w1", "w2"]));
    assert_eq!(
        flat.defs[1].as_formula(),
        weak_always(Interval::full(), iff(atom("w1"), f("c S w2")))
    );
    assert_eq!(flat.defs[1].as_untimed_since(), Some((&"c".to_string(), &"w2".to_string())));
}

#[test]
fn flatten_future_only_is_identity() {
    let phi = f("a U[1,2] (b & F c)");
    let flat = flatten(&phi, FlattenPolicy::PastOnly, &mut FreshNames::default());
    assert_eq!(flat.skeleton, phi);
    assert!(flat.defs.is_empty());
}

#[test]
fn flatten_nested_inner_first_and_arguments() {
    let flat = flatten(&f("P[0,1] P[0,1] a"), FlattenPolicy::PastOnly, &mut FreshNames::default());
    assert_eq!(flat.skeleton, atom("w1"));
    assert_eq!(flat.defs[0], TemporalDefinition::new("w2", f("P[0,1] a"), DefRole::Modal));
    assert_eq!(flat.defs[1], TemporalDefinition::new("w1", f("P[0,1] w2"), DefRole::Modal));
    let flat = flatten(&f("P[1,2) (a & F b)"), FlattenPolicy::PastOnly, &mut FreshNames::default());
    assert_eq!(flat.defs[0], TemporalDefinition::new("w2", f("a & F b"), DefRole::Argument));
    assert_eq!(flat.defs[1].as_past_eventually(), Some((&Interval::closed_open(1, 2), &"w2".to_string())));
    let flat = flatten(&f("H[0,2] a"), FlattenPolicy::PastOnly, &mut FreshNames::default());
    assert_eq!(flat.skeleton, f("!w1"));
    assert_eq!(flat.defs[0].body, f("!a"));
}

#[test]
fn flatten_avoids_base_names() {
    let flat = flatten(&f("w1 & P[0,1] w2"), FlattenPolicy::PastOnly, &mut FreshNames::default());
    assert_eq!(flat.skeleton, f("w1 & w3"));
}

#[test]
fn enf_examples() {
    assert_eq!(enf(&atom("a"), &set(&["a", "b"])).unwrap(), f("a & Gw[0,inf) (a | b)"));
    assert_eq!(enf(&Formula::True, &set(&["a"])).unwrap(), f("true & Gw[0,inf) a"));
    let e = enf(&atom("a"), &set(&["a", "b"])).unwrap();
    assert!(!satisfies(&word("{a}@0 {c}@1"), &e).unwrap());
    assert!(satisfies(&word("{a}@0 {b,c}@1"), &e).unwrap());
    assert!(enf(&atom("a"), &set(&[])).is_err());
}

#[test]
fn onf_examples() {
    assert_eq!(onf(&atom("a"), &set(&["a"])).unwrap(), f("(a & a) & a & (G false -> a)"));
    let psi = f("p1 U[1,2] (p2 & G p3)");
    let sigma = set(&["p1", "p2", "p3"]);
    let act = f("p1 | p2 | p3");
    let z = |p: &str| and(atom(p), act.clone());
    let reference = and_all([
        until(
            Interval::closed(1, 2),
            implies(act.clone(), z("p1")),
            and(act.clone(), and(z("p2"), always(Interval::full(), implies(act.clone(), z("p3"))))),
        ),
        act.clone(),
        implies(last_point(), act.clone()),
    ]);
    let ours = onf(&psi, &sigma).unwrap();
    let x = set(&["p1", "p2", "p3", "x"]);
    for w in small_words(&x, 4) {
        assert_eq!(satisfies(&w, &ours).unwrap(), satisfies(&w, &reference).unwrap(), "{w}");
    }
}

#[test]
fn since_elimination_example() {
    let def = TemporalDefinition::new("w1", f("d S e"), DefRole::Modal);
    let nu = eliminate_since_def(&def).unwrap();
    assert!(satisfies(&word("{e}@0 {d,w1}@1 {a,w1}@2"), &nu).unwrap());
    assert!(!satisfies(&word("{e,w1}@0 {d,w1}@1 {a,w1}@2"), &nu).unwrap());
    assert!(eliminate_since_def(&TemporalDefinition::new("w", f("d S[0,2] e"), DefRole::Modal)).is_err());
    assert!(eliminate_since_def(&TemporalDefinition::new("w", f("P[0,2] e"), DefRole::Modal)).is_err());
}

#[test]
fn rewrite_snp_examples() {
    let r = rewrite_snp(&f("a S[2,4) b")).unwrap();
    let p1 = f("P[2,3) b & (a S b) & !P[0,2) !(a & a S b)");
    let p2 = f("P[3,4) b & (a S b) & !P[0,3) !(a & a S b)");
    assert_eq!(r, or(p1, p2));
    assert_eq!(rewrite_snp(&f("a S b")).unwrap(), f("a S b"));
    assert_eq!(rewrite_snp(&f("a S[0,inf) b")).unwrap(), f("a S b"));
    assert!(rewrite_snp(&f("a S[1,1] b")).is_err());
    assert!(rewrite_snp(&f("P[2,2] b")).is_err());
}

#[test]
fn mark_witnesses_examples() {
    let def = TemporalDefinition::new("w", f("P[0,1] d"), DefRole::Modal);
    let marked = mark_witnesses(&word("{d}@0 {a}@0.5 {a}@1.5"), std::slice::from_ref(&def)).unwrap();
    assert_eq!(marked, word("{d}@0 {a,w}@0.5 {a}@1.5"));
    let plain = word("{a}@0");
    assert_eq!(mark_witnesses(&plain, &[]).unwrap(), plain);
    let bad = [TemporalDefinition::new("w1", f("P[0,1] w2"), DefRole::Modal), TemporalDefinition::new("w2", f("a"), DefRole::Argument)];
    assert!(mark_witnesses(&plain, &bad).is_err());
}

/// Every strictly monotonic word over `props` with at most `n` points on the half grid.
fn small_words(props: &BTreeSet<Prop>, n: usize) -> Vec<TimedWord> {
    let space = mtl_semantics::GridSpace::new(props, n, &rat(1, 2), &rat(2, 1)).unwrap();
    space.words().collect()
}

fn arb_past_interval() -> impl Strategy<Value = Interval> {
    (0u64..3, 1u64..3, any::<bool>(), any::<bool>(), any::<bool>()).prop_map(|(l, w, lc, rc, inf)| {
        if inf {
            Interval::new(l, None, lc, false).unwrap()
        } else {
            Interval::new(l, Some(l + w), lc, rc).unwrap()
        }
    })
}

fn arb_future_interval() -> impl Strategy<Value = Interval> {
    (0u64..3, 0u64..3, any::<bool>(), any::<bool>(), any::<bool>()).prop_map(|(l, w, lc, rc, inf)| {
        if inf {
            Interval::new(l, None, lc, false).unwrap()
        } else if w == 0 {
            Interval::point(l)
        } else {
            Interval::new(l, Some(l + w), lc, rc).unwrap()
        }
    })
}

/// Formulas of the partially punctual fragment over `{a, b}`.
fn arb_snp() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![Just(atom("a")), Just(atom("b")), Just(Formula::True)];
    leaf.prop_recursive(4, 20, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(not),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| and(x, y)),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| or(x, y)),
            (arb_future_interval(), inner.clone(), inner.clone()).prop_map(|(i, x, y)| until(i, x, y)),
            (arb_past_interval(), inner.clone(), inner.clone()).prop_map(|(i, x, y)| since(i, x, y)),
            (arb_past_interval(), inner.clone()).prop_map(|(i, x)| past_eventually(i, x)),
            (arb_past_interval(), inner.clone()).prop_map(|(i, x)| historically(i, x)),
            (arb_future_interval(), inner).prop_map(|(i, x)| eventually(i, x)),
        ]
    })
}

fn arb_word(props: Vec<&'static str>) -> impl Strategy<Value = TimedWord> {
    prop::collection::vec((prop::sample::subsequence(props.clone(), 1..=props.len()), 1i64..7), 1..7).prop_map(|raw| {
        let mut t = rat(0, 1);
        let mut pts = Vec::new();
        for (k, (ev, step)) in raw.into_iter().enumerate() {
            if k > 0 {
                t += rat(step, 4);
            }
            pts.push(Point::new(ev, t.clone()));
        }
        TimedWord::strict(pts).unwrap()
    })
}

/// Inserts non-action points carrying only `x` and sprinkles `x` on action points.
fn oversample(w: &TimedWord, seeds: &[(bool, bool, i64)]) -> TimedWord {
    let mut pts = Vec::new();
    for (k, p) in w.points().iter().enumerate() {
        let (mark, insert, frac) = seeds[k % seeds.len()];
        let mut q = p.clone();
        if mark {
            q.event.insert("x".into());
        }
        pts.push(q);
        if insert && k + 1 < w.len() {
            let next = &w.points()[k + 1].time;
            let t = &p.time + (next - &p.time) * rat(frac, 8);
            pts.push(Point::new(["x"], t));
        }
    }
    TimedWord::strict(pts).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn rewrite_snp_is_equivalent(phi in arb_snp(), w in arb_word(vec!["a", "b"])) {
        let r = rewrite_snp(&phi).unwrap();
        prop_assert_eq!(eval_positions(&w, &phi), eval_positions(&w, &r));
    }

    #[test]
    fn rewrite_snp_output_shape(phi in arb_snp()) {
        let r = rewrite_snp(&phi).unwrap();
        let mut ok = true;
        let mut check = |g: Formula| {
            match &g {
                Formula::Since(i, ..) if !i.is_full() => ok = false,
                Formula::PastEventually(i, _) if i.is_punctual() => ok = false,
                Formula::Historically(..) => ok = false,
                _ => {}
            }
            g
        };
        r.map_bottom_up(&mut check);
        prop_assert!(ok);
        if phi.is_mitl() {
            prop_assert!(r.is_mitl());
        }
    }

    #[test]
    fn flattening_marks_a_model_of_the_flat_formula(phi in arb_snp(), w in arb_word(vec!["a", "b"])) {
        let flat = flatten(&phi, FlattenPolicy::PastOnly, &mut FreshNames::default());
        let marked = mark_witnesses(&w, &flat.defs).unwrap();
        for d in &flat.defs {
            prop_assert!(satisfies(&marked, &d.as_formula()).unwrap());
        }
        let sigma = set(&["a", "b", "true_"]);
        let e = enf(&flat.as_formula(), &sigma).unwrap();
        prop_assert_eq!(satisfies(&marked, &e).unwrap(), satisfies(&w, &phi).unwrap());
        let mut past = false;
        flat.skeleton.map_bottom_up(&mut |g: Formula| { past |= g.is_past(); g });
        prop_assert!(!past);
    }

    #[test]
    fn flattening_all_policy(phi in arb_snp(), w in arb_word(vec!["a", "b"])) {
        let flat = flatten(&phi, FlattenPolicy::All, &mut FreshNames::default());
        prop_assert_eq!(flat.skeleton.modal_count(), 0);
        let marked = mark_witnesses(&w, &flat.defs).unwrap();
        prop_assert_eq!(satisfies(&marked, &flat.as_formula()).unwrap(), satisfies(&w, &phi).unwrap());
    }

    #[test]
    fn since_constraints_characterize_since(
        w in arb_word(vec!["c", "f", "z"]),
        marks in prop::collection::vec(any::<bool>(), 7),
    ) {
        let def = TemporalDefinition::new("r", f("c S f"), DefRole::Modal);
        let nu = eliminate_since_def(&def).unwrap();
        let truth = eval_positions(&w, &def.body);
        // The exact marking satisfies the constraints.
        let marked = mark_witnesses(&w, std::slice::from_ref(&def)).unwrap();
        prop_assert!(satisfies(&marked, &nu).unwrap());
        // Any other marking violates them.
        let pts: Vec<Point> = w.points().iter().zip(&marks).map(|(p, &m)| {
            let mut q = p.clone();
            if m { q.event.insert("r".into()); }
            q
        }).collect();
        let arbitrary = TimedWord::strict(pts).unwrap();
        let exact = marks.iter().take(w.len()).copied().eq(truth.iter().copied());
        prop_assert_eq!(satisfies(&arbitrary, &nu).unwrap(), exact);
    }

    #[test]
    fn onf_is_invariant_under_oversampling(
        phi in arb_snp(),
        w in arb_word(vec!["a", "b"]),
        seeds in prop::collection::vec((any::<bool>(), any::<bool>(), 1i64..8), 1..5),
    ) {
        let sigma = set(&["a", "b"]);
        let z = onf(&phi, &sigma).unwrap();
        let over = oversample(&w, &seeds);
        prop_assert_eq!(satisfies(&w, &phi).unwrap(), satisfies(&over, &z).unwrap());
        // Oversampling a model of the normal form again keeps it a model.
        if satisfies(&over, &z).unwrap() {
            let again = oversample(&over, &[(false, true, 3)]);
            prop_assert!(satisfies(&again, &z).unwrap());
        }
    }

    #[test]
    fn boolean_closure_by_composition(
        p1 in arb_snp(),
        p2 in arb_snp(),
        w in arb_word(vec!["a", "b"]),
    ) {
        let mut fresh = FreshNames::new(["a".to_string(), "b".to_string()]);
        let f1 = flatten(&p1, FlattenPolicy::PastOnly, &mut fresh);
        let f2 = flatten(&p2, FlattenPolicy::PastOnly, &mut fresh);
        let sigma = set(&["a", "b"]);
        let z1 = mark_witnesses(&w, &f1.defs).unwrap();
        let z2 = mark_witnesses(&w, &f2.defs).unwrap();
        let both = compose_simple(&z1, &z2, &sigma, &f1.witnesses, &f2.witnesses).unwrap();
        let conj = and(f1.as_formula(), f2.as_formula());
        let expected = satisfies(&w, &p1).unwrap() && satisfies(&w, &p2).unwrap();
        prop_assert_eq!(satisfies(&both, &conj).unwrap(), expected);
    }
}
