use mtl_core::formula::{and, and_all, not, or_all, past_eventually, since};
use mtl_core::{Formula, Interval};

use crate::error::NormalFormError;

/// Rewrites every timed Since into non-punctual `⋄̄` and untimed `S`.
///
/// `a S_I b` is split into unit-width pieces `J` (the first and last keep the brackets of
/// `I`, an unbounded tail stays one piece). Each piece with left end `l` becomes
///
/// ```text
/// ⋄̄_J b ∧ (a S b) ∧ ⊟_K (a ∧ a S b)
/// ```
///
/// with `⊟_K ψ = ¬⋄̄_K ¬ψ`, `K = [0,l)` for a closed left end and `K = [0,l]` for an open one. When `l = 0`
/// the `⊟` conjunct is vacuous on strictly monotonic words and is dropped. `⊟_I φ` is
/// rewritten to `¬⋄̄_I ¬φ`, and `true S_I b` to `⋄̄_I b`. Equivalence holds at every
/// position of every strictly monotonic word.
pub fn rewrite_snp(phi: &Formula) -> Result<Formula, NormalFormError> {
    let kids = phi.children().into_iter().map(rewrite_snp).collect::<Result<Vec<_>, _>>()?;
    let f = phi.with_children(kids);
    match &f {
        Formula::Since(i, _, _) | Formula::PastEventually(i, _) | Formula::Historically(i, _) if i.is_punctual() => {
            Err(NormalFormError::PunctualPast(i.to_string()))
        }
        Formula::Historically(i, x) => Ok(historically_as_past(i.clone(), (**x).clone())),
        Formula::Since(i, _, _) if i.is_full() => Ok(f.clone()),
        Formula::Since(i, a, b) if **a == Formula::True => Ok(past_eventually(i.clone(), (**b).clone())),
        Formula::Since(i, a, b) => Ok(or_all(pieces(i).iter().map(|j| expand_piece(j, a, b)))),
        _ => Ok(f),
    }
}

fn pieces(i: &Interval) -> Vec<Interval> {
    let l = i.lower();
    let Some(u) = i.upper() else {
        return vec![i.clone()];
    };
    if u - l <= 1 {
        return vec![i.clone()];
    }
    let mut out = vec![Interval::new(l, Some(l + 1), i.left_closed(), false).expect("unit piece")];
    for t in l + 1..u - 1 {
        out.push(Interval::closed_open(t, t + 1));
    }
    out.push(Interval::new(u - 1, Some(u), true, i.right_closed()).expect("unit piece"));
    out
}

fn expand_piece(j: &Interval, a: &Formula, b: &Formula) -> Formula {
    let untimed = since(Interval::full(), a.clone(), b.clone());
    let mut parts = vec![past_eventually(j.clone(), b.clone()), untimed.clone()];
    let l = j.lower();
    if l > 0 {
        let k = if j.left_closed() { Interval::closed_open(0, l) } else { Interval::closed(0, l) };
        parts.push(historically_as_past(k, and(a.clone(), untimed)));
    }
    and_all(parts)
}

/// `⊟_I φ` written as `¬⋄̄_I ¬φ`.
fn historically_as_past(i: Interval, phi: Formula) -> Formula {
    not(past_eventually(i, not(phi)))
}
