use std::collections::BTreeSet;

use mtl_core::formula::*;
use mtl_core::{rat, AlphabetSplit, Formula, FreshNames, Interval, Point, Prop, Time, TimedWord};
use mtl_elim_sp::*;
use mtl_normal_forms::{mark_witnesses, DefRole, TemporalDefinition};
use mtl_projections::simple_project;
use mtl_semantics::{satisfies, CompiledFormula};
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

fn t(text: &str) -> Time {
    word(&format!("{{a}}@{text}")).points()[0].time.clone()
}

fn def_of(i: Interval) -> TemporalDefinition {
    TemporalDefinition::new("w1", past_eventually(i, atom("a")), DefRole::Modal)
}

fn bounded_intervals() -> Vec<Interval> {
    let mut out = Vec::new();
    for l in 0..=3u64 {
        for u in l + 1..=3 {
            for (lc, rc) in [(true, false), (false, true), (true, true), (false, false)] {
                out.push(Interval::new(l, Some(u), lc, rc).unwrap());
            }
        }
    }
    out
}

fn eliminate(i: &Interval) -> SpEliminationOutput {
    let mut names = FreshNames::new(set(&["a", "z", "w1"]));
    elim_bounded_past_sp(&def_of(i.clone()), &mut names).unwrap()
}

fn arb_base_word() -> impl Strategy<Value = TimedWord> {
    prop::collection::vec((prop::sample::select(vec![vec!["a"], vec!["z"], vec!["a", "z"]]), 1i64..9), 1..9).prop_map(
        |raw| {
            let mut t = rat(0, 1);
            let mut pts = Vec::new();
            for (k, (props, step)) in raw.into_iter().enumerate() {
                if k > 0 {
                    t += rat(step, 4);
                }
                pts.push(Point::new(props, t.clone()));
            }
            TimedWord::strict(pts).unwrap()
        },
    )
}

fn with_witness(rho: &TimedWord, i: &Interval) -> TimedWord {
    mark_witnesses(rho, &[def_of(i.clone())]).unwrap()
}

fn split_for(out: &SpEliminationOutput) -> AlphabetSplit {
    AlphabetSplit::new(set(&["a", "z", "w1"]), out.fresh_set()).unwrap()
}

fn toggle(w: &TimedWord, pos: usize, prop: &str) -> TimedWord {
    let mut pts = w.points().to_vec();
    let i = pos % pts.len();
    if !pts[i].event.remove(prop) {
        pts[i].event.insert(prop.to_string());
    }
    TimedWord::strict(pts).unwrap()
}

#[test]
fn region_pairs_of_the_three_point_example() {
    let i = Interval::closed_open(6, 7);
    let p = compute_region_pair(&t("3.1"), &t("4.8"), &i).unwrap();
    assert_eq!(p.d, 1);
    assert_eq!(p.i1.to_string(), "[9.8,10.8)");
    assert_eq!(p.i2.to_string(), "[10.1,11.1)");
    assert_eq!(p.region.to_string(), "[10.1,10.8)");
    let q = compute_region_pair(&t("4.8"), &t("5.9"), &i).unwrap();
    assert_eq!(q.d, 1);
    assert_eq!(q.i1.to_string(), "[10.9,11.9)");
    assert_eq!(q.i2.to_string(), "[11.8,12.8)");
    let integer = compute_region_pair(&t("1"), &t("3"), &Interval::closed_open(2, 3)).unwrap();
    assert_eq!(integer.d, 1);
    assert_eq!(integer.i1.intersect(&integer.i2), integer.region);
    assert!(matches!(compute_region_pair(&t("0"), &t("0.5"), &i), Err(SpError::OutOfCase { .. })));
    assert!(matches!(compute_region_pair(&t("0"), &t("7.5"), &i), Err(SpError::OutOfCase { .. })));
}

#[test]
fn unbounded_output_shapes() {
    let got = elim_unbounded_past_sp(&def_of(Interval::at_least(3))).unwrap();
    let want = f("(Gw[0,inf) !a | Gw[0,inf) (a -> G[3,inf) w1)) & (Gw[0,inf) (!a & !w1) | (!a & !w1) Uw (a & Gw[0,3) !w1))");
    assert_eq!(got, want);
    let zero = elim_unbounded_past_sp(&def_of(Interval::at_least(0))).unwrap();
    let want = f("(Gw[0,inf) !a | Gw[0,inf) (a -> G[0,inf) w1)) & (Gw[0,inf) (!a & !w1) | (!a & !w1) Uw (a & !w1))");
    assert_eq!(zero, want);
    assert!(matches!(elim_unbounded_past_sp(&def_of(Interval::closed(0, 1))), Err(SpError::BoundedInterval(_))));
}

#[test]
fn bounded_families_have_l_members() {
    let out = eliminate(&Interval::closed_open(5, 6));
    assert_eq!(out.fresh.beg.len(), 5);
    assert_eq!(out.fresh.end.len(), 5);
    assert_eq!(out.params.shape.pieces().iter().map(|(d, _)| *d).collect::<Vec<_>>(), vec![1, 2, 3, 4, 5]);
    assert_eq!(out.fresh.beg[0], "beg1_w1");
    assert!(out.group("MARK_l0").is_none());
    let zero = eliminate(&Interval::closed_open(0, 1));
    assert!(zero.fresh.beg.is_empty());
    assert!(zero.group("MARK_l0").is_some());
    let names: Vec<&str> = zero.groups.iter().map(|(n, _)| n.as_str()).collect();
    assert_eq!(names, SP_MARK_GROUPS);
    assert!(matches!(
        elim_bounded_past_sp(&def_of(Interval::point(2)), &mut FreshNames::default()),
        Err(SpError::PunctualInterval(_))
    ));
}

#[test]
fn bounded_output_is_future_only_and_mitl() {
    for i in bounded_intervals() {
        let out = eliminate(&i);
        assert!(out.mark.is_future_only(), "{i}");
        assert!(out.mark.is_mitl(), "{i}");
    }
}

#[test]
fn size_is_linear_in_the_lower_constant() {
    let counts: Vec<usize> =
        (1..=8u64).map(|l| eliminate(&Interval::closed_open(l, l + 1)).mark.modal_count()).collect();
    let step = counts[1] - counts[0];
    assert!(step > 0);
    for w in counts.windows(2) {
        assert_eq!(w[1] - w[0], step);
    }
}

#[test]
fn bits_separate_the_erroneous_intersection() {
    let i = Interval::closed_open(6, 7);
    let out = eliminate(&i);
    let rho = with_witness(&word("{a}@3.1 {a}@4.8 {a}@5.9 {z}@10.2 {z}@11 {z}@11.85 {z}@13"), &i);
    let w = simple_witness(&rho, &out).unwrap();
    let at = |s: &str| w.points().iter().find(|p| p.time == t(s)).unwrap().event.clone();
    assert!(at("3.1").contains("a0_w1") && at("4.8").contains("a1_w1") && at("5.9").contains("a0_w1"));
    let e = at("11");
    assert!(e.contains("x0_w1") && e.contains("y1_w1"));
    assert!(!e.contains("x1_w1") && !e.contains("y0_w1"));
    assert!(e.contains("w1"));
    assert!(at("10.2").contains("x0_w1") && at("10.2").contains("y0_w1") && !at("10.2").contains("w1"));
    assert!(at("11.85").contains("x1_w1") && at("11.85").contains("y1_w1"));
    assert!(satisfies(&w, &out.mark).unwrap());
}

#[test]
fn short_gaps_get_no_middle_case_marks() {
    let i = Interval::closed_open(1, 3);
    let out = eliminate(&i);
    let rho = with_witness(&word("{a}@0 {a}@1.5 {z}@2 {a}@3"), &i);
    let w = simple_witness(&rho, &out).unwrap();
    let marked: BTreeSet<Prop> = w.propositions();
    assert!(marked.iter().all(|p| !p.starts_with("beg") && !p.starts_with('x') && !p.starts_with('y')));
    assert!(satisfies(&w, &out.mark).unwrap());
}

#[test]
fn witness_rejects_non_models() {
    let out = eliminate(&Interval::closed_open(1, 2));
    assert!(matches!(simple_witness(&word("{a,w1}@0"), &out), Err(SpError::NotAModel(_))));
    assert!(matches!(simple_witness(&word("#weak {a}@0 {a}@0"), &out), Err(SpError::WeakWord)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn unbounded_matches_definition(rho in arb_base_word(), l in 0u64..3, lc in any::<bool>(), flips in prop::collection::vec(0usize..16, 0..3)) {
        let d = def_of(Interval::new(l, None, lc, false).unwrap());
        let mut w = mark_witnesses(&rho, std::slice::from_ref(&d)).unwrap();
        for k in flips {
            w = toggle(&w, k, "w1");
        }
        let out = elim_unbounded_past_sp(&d).unwrap();
        prop_assert_eq!(satisfies(&w, &out).unwrap(), satisfies(&w, &d.as_formula()).unwrap());
    }

    #[test]
    fn region_pairs_cut_out_the_region(start in 0i64..40, gap in 1i64..40, which in 0usize..24) {
        let intervals = bounded_intervals();
        let i = &intervals[which % intervals.len()];
        let (tj, tk) = (rat(start, 4), rat(start + gap, 4));
        if let Ok(p) = compute_region_pair(&tj, &tk, i) {
            prop_assert!(p.d >= 1 && p.d <= i.lower());
            prop_assert_eq!(p.i1.intersect(&p.i2), p.region.clone());
            prop_assert!(!p.region.is_empty());
        }
    }

    #[test]
    fn region_pairs_of_a_chain_are_disjoint(gaps in prop::collection::vec(1i64..40, 3), which in 0usize..24) {
        let intervals = bounded_intervals();
        let i = &intervals[which % intervals.len()];
        let shape = SpShape::new(i).unwrap();
        let times: Vec<Time> = std::iter::once(0).chain(gaps.iter().scan(0, |acc, g| { *acc += g; Some(*acc) })).map(|n| rat(n, 4)).collect();
        let flagged = gaps.iter().all(|g| shape.flag_gap().contains(&rat(*g, 4)));
        if let (true, Ok(first), Ok(last)) = (flagged, compute_region_pair(&times[0], &times[1], i), compute_region_pair(&times[2], &times[3], i)) {
            prop_assert!(first.i2.intersect(&last.i1).is_empty());
            prop_assert!(first.i1.intersect(&last.i2).is_empty());
        }
    }

    #[test]
    fn witness_satisfies_mark_and_projects_back(rho in arb_base_word()) {
        for i in bounded_intervals() {
            let out = eliminate(&i);
            let marked = with_witness(&rho, &i);
            let w = simple_witness(&marked, &out).unwrap();
            prop_assert!(satisfies(&w, &out.mark).unwrap(), "{} {}", i, w);
            prop_assert_eq!(simple_project(&w, &split_for(&out)).unwrap(), marked);
        }
    }

    #[test]
    fn flipping_b_violates_mark(rho in arb_base_word()) {
        for i in bounded_intervals() {
            let out = eliminate(&i);
            let w = simple_witness(&with_witness(&rho, &i), &out).unwrap();
            let mark = CompiledFormula::new(&out.mark);
            for k in 0..w.len() {
                prop_assert!(!mark.satisfied_by(&toggle(&w, k, "w1")).unwrap(), "{} flip at {}", i, k);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn perturbed_models_of_mark_project_to_models(
        rho in arb_base_word(),
        which in 0usize..24,
        edits in prop::collection::vec((0usize..64, 0usize..64), 1..5),
    ) {
        let intervals = bounded_intervals();
        let i = &intervals[which % intervals.len()];
        let out = eliminate(i);
        let mut w = simple_witness(&with_witness(&rho, i), &out).unwrap();
        let mut props: Vec<Prop> = out.fresh_set().into_iter().collect();
        props.push("w1".to_string());
        for (pos, k) in edits {
            w = toggle(&w, pos, &props[k % props.len()]);
        }
        if satisfies(&w, &out.mark).unwrap() {
            let back = simple_project(&w, &split_for(&out)).unwrap();
            prop_assert!(satisfies(&back, &def_of(i.clone()).as_formula()).unwrap(), "{} {}", i, w);
        }
    }
}
