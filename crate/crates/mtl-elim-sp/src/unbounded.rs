use mtl_core::formula::{always, and, atom, implies, not, or, weak_always, weak_until};
use mtl_core::{Formula, Interval};
use mtl_normal_forms::TemporalDefinition;

use crate::error::SpError;

/// Replaces `□ʷ(b ↔ ⋄̄_⟨l,∞) a)` by the equivalent future formula
///
/// ```text
/// [□ʷ¬a ∨ □ʷ(a → □_⟨l,∞) b)] ∧ [□ʷ(¬a ∧ ¬b) ∨ (¬a ∧ ¬b) Uʷ (a ∧ □ʷ_[0,l⟩ ¬b)]
/// ```
///
/// where `[0,l⟩` takes the complement of the lower bracket and the last conjunct is
/// `a ∧ ¬b` when `l = 0`. No fresh propositions are needed.
pub fn elim_unbounded_past_sp(def: &TemporalDefinition) -> Result<Formula, SpError> {
    let (i, a) = def.as_past_eventually().ok_or_else(|| SpError::NotPastEventuality(def.witness.clone()))?;
    if !i.is_unbounded() {
        return Err(SpError::BoundedInterval(i.to_string()));
    }
    let a = atom(a.clone());
    let b = atom(def.witness.clone());
    let l = i.lower();
    let g = |f: Formula| weak_always(Interval::full(), f);
    let first = if l == 0 {
        not(b.clone())
    } else {
        weak_always(Interval::new(0, Some(l), true, !i.left_closed()).expect("l > 0"), not(b.clone()))
    };
    let after = Interval::new(l, None, i.left_closed(), false).expect("right-open unbounded interval");
    let none = and(not(a.clone()), not(b.clone()));
    Ok(and(
        or(g(not(a.clone())), g(implies(a.clone(), always(after, b)))),
        or(g(none.clone()), weak_until(none, and(a, first))),
    ))
}
