use std::collections::{BTreeMap, BTreeSet};

use mtl_core::formula::{and, atom, implies, not, past_eventually, since};
use mtl_core::time::floor;
use mtl_core::{Interval, Point, Prop, Time, TimedWord};
use mtl_normal_forms::{act, onf, DefRole, TemporalDefinition};
use mtl_semantics::{satisfies, CompiledFormula};

use crate::bounded::OsEliminationOutput;
use crate::error::OsError;

/// Builds an oversampled extension of `ρ'` that satisfies `out.mark`.
///
/// Integer grid points `τ_1 + n` up to the last timestamp carry `c`. Every pair of
/// consecutive `a`-action points whose gap opens a window where `b` fails is marked
/// `b_s`/`b_e`, and the window ends are marked `beg` at `τ_j + u` and `end` at `τ_k + l`
/// when those times do not pass the last timestamp. Points added on the way carry only
/// fresh propositions.
pub fn oversample_witness(rho: &TimedWord, out: &OsEliminationOutput) -> Result<TimedWord, OsError> {
    if !rho.is_strict() {
        return Err(OsError::WeakWord);
    }
    let (first, last) = match (rho.first_time(), rho.last_time()) {
        (Some(f), Some(l)) => (f.clone(), l.clone()),
        _ => return Err(OsError::EmptyWord),
    };
    let p = &out.params;
    let x = &out.fresh;
    let def = TemporalDefinition::new(p.b.clone(), past_eventually(p.interval.clone(), atom(p.a.clone())), DefRole::Modal);
    if !satisfies(rho, &onf(&def.as_formula(), &out.sigma)?)? {
        return Err(OsError::NotAModel(p.b.clone()));
    }
    let is_act = |pt: &Point| pt.event.iter().any(|q| out.sigma.contains(q));
    let (l, u) = (Time::from_integer(p.lower().into()), Time::from_integer(p.upper().into()));
    let gap = Interval::new(p.upper() - p.lower(), None, !p.interval.left_closed() && !p.interval.right_closed(), false)
        .expect("right-open unbounded interval");

    let mut points: BTreeMap<Time, BTreeSet<Prop>> = rho.points().iter().map(|pt| (pt.time.clone(), pt.event.clone())).collect();
    let mut mark = |t: &Time, prop: &Prop| {
        points.entry(t.clone()).or_default().insert(prop.clone());
    };

    let one = Time::from_integer(1.into());
    let mut grid = first.clone();
    while grid <= last {
        mark(&grid, &x.c);
        grid += &one;
    }
    let cell = |t: &Time| &first + floor(&(t - &first));

    let a_points: Vec<&Time> =
        rho.points().iter().filter(|pt| is_act(pt) && pt.holds(&p.a)).map(|pt| &pt.time).collect();
    for pair in a_points.windows(2) {
        let (tj, tk) = (pair[0], pair[1]);
        if !gap.contains(&(tk - tj)) {
            continue;
        }
        mark(tj, &x.bs);
        mark(tk, &x.be);
        mark(&cell(tj), &x.cbs);
        mark(&cell(tk), &x.cbe);
        let tb = tj + &u;
        if tb <= last {
            mark(&tb, &x.beg);
        }
        let te = tk + &l;
        if te <= last {
            mark(&te, &x.end);
        }
    }

    let mut word = TimedWord::strict(points.into_iter().map(|(time, event)| Point { event, time }).collect())?;
    let sigma_act = act(&out.sigma)?;
    let r = since(
        Interval::full(),
        implies(sigma_act.clone(), not(atom(p.a.clone()))),
        and(atom(x.bs.clone()), sigma_act),
    );
    let truth = CompiledFormula::new(&r).eval_word(&word);
    let mut pts = word.into_points();
    for (pt, holds) in pts.iter_mut().zip(truth) {
        if holds {
            pt.event.insert(x.sjk.clone());
        }
    }
    word = TimedWord::strict(pts)?;
    Ok(word)
}
