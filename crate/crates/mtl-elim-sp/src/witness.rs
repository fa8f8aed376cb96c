use mtl_core::formula::{atom, not, past_eventually, since};
use mtl_core::{Formula, Interval, Prop, TimedWord};
use mtl_normal_forms::{DefRole, TemporalDefinition};
use mtl_semantics::{satisfies, CompiledFormula};

use crate::bounded::SpEliminationOutput;
use crate::error::SpError;

/// Marks a model `ρ` of the definition with the fresh propositions of `out`, producing a
/// simple extension that satisfies `out.mark`.
///
/// The first `a` gets bit `a0`, and the bit flips exactly across gaps that leave room
/// for points where `b` fails. Middle-case pairs get `beg_d`/`end_d` and the points of
/// their over-approximations get `x_c`/`y_c`, where `c` is the bit of the earlier `a`.
/// Far pairs get `b¹∞`/`b²∞`. Nothing else is marked.
pub fn simple_witness(rho: &TimedWord, out: &SpEliminationOutput) -> Result<TimedWord, SpError> {
    if !rho.is_strict() {
        return Err(SpError::WeakWord);
    }
    if rho.is_empty() {
        return Err(SpError::EmptyWord);
    }
    let p = &out.params;
    let s = &p.shape;
    let x = &out.fresh;
    let def = TemporalDefinition::new(
        p.b.clone(),
        past_eventually(s.interval().clone(), atom(p.a.clone())),
        DefRole::Modal,
    );
    if !satisfies(rho, &def.as_formula())? {
        return Err(SpError::NotAModel(p.b.clone()));
    }
    let mut pts = rho.points().to_vec();
    let a_pos: Vec<usize> = (0..pts.len()).filter(|&i| pts[i].holds(&p.a)).collect();
    let mut mark = |i: usize, prop: &Prop| {
        pts[i].event.insert(prop.clone());
    };
    let mut bit = 0usize;
    if let Some(&first) = a_pos.first() {
        mark(first, &x.bits[0]);
    }
    let flag = s.flag_gap();
    let far = s.far_gap();
    for pair in a_pos.windows(2) {
        let (j, k) = (pair[0], pair[1]);
        let (tj, tk) = (rho.points()[j].time.clone(), rho.points()[k].time.clone());
        let gap = &tk - &tj;
        let c = bit;
        if flag.contains(&gap) {
            bit = 1 - bit;
        }
        mark(k, &x.bits[bit]);
        if let Some(d) = s.piece_of(&gap) {
            let idx = (d - 1) as usize;
            mark(j, &x.beg[idx]);
            mark(k, &x.end[idx]);
            let (i1, i2) = (s.i1(d), s.i2(d));
            for q in j + 1..rho.len() {
                if i2.contains(&(&rho.points()[q].time - &tj)) {
                    mark(q, &x.x[c]);
                }
            }
            for q in k..rho.len() {
                if i1.contains(&(&rho.points()[q].time - &tk)) {
                    mark(q, &x.y[c]);
                }
            }
        } else if far.contains(&gap) {
            mark(j, &x.binf1);
            mark(k, &x.binf2);
        }
    }
    let mut word = TimedWord::strict(pts)?;
    let na = not(atom(p.a.clone()));
    let mut aux: Vec<(Prop, Formula)> =
        x.beg.iter().zip(&x.send).map(|(b, r)| (r.clone(), since(Interval::full(), na.clone(), atom(b.clone())))).collect();
    aux.push((x.sinf.clone(), since(Interval::full(), na, atom(x.binf1.clone()))));
    for (r, f) in aux {
        let truth = CompiledFormula::new(&f).eval_word(&word);
        let mut pts = word.into_points();
        for (pt, holds) in pts.iter_mut().zip(truth) {
            if holds {
                pt.event.insert(r.clone());
            }
        }
        word = TimedWord::strict(pts)?;
    }
    Ok(word)
}
