use std::collections::BTreeSet;

use mtl_core::formula::{and, atom, implies, not, or, weak_always, weak_until};
use mtl_core::{Formula, Interval, Prop};
use mtl_normal_forms::{act, TemporalDefinition};

use crate::error::OsError;

/// Replaces `□ʷ(b ↔ ⋄̄_⟨l,∞) a)` by an equivalent future formula over oversampled
/// behaviours:
///
/// ```text
/// [□ʷα ∨ α Uʷ (a ∧ act ∧ F)] ∧ □ʷ[(a ∧ act) → □_⟨l,∞)(act → b)]
/// ```
///
/// with `α = act → (¬a ∧ ¬b)`, `F = □ʷ_[0,l⟩(act → ¬b)` and `F = act → ¬b` when `l = 0`.
/// The bracket of `[0,l⟩` is the complement of the lower bracket of the interval.
pub fn elim_unbounded_past_os(def: &TemporalDefinition, sigma: &BTreeSet<Prop>) -> Result<Formula, OsError> {
    let (i, a) = def.as_past_eventually().ok_or_else(|| OsError::NotPastEventuality(def.witness.clone()))?;
    if !i.is_unbounded() {
        return Err(OsError::BoundedInterval(i.to_string()));
    }
    let act = act(sigma).map_err(|_| OsError::EmptyAlphabet)?;
    let a = atom(a.clone());
    let b = atom(def.witness.clone());
    let l = i.lower();
    let big_a = and(a.clone(), act.clone());
    let nb = implies(act.clone(), not(b.clone()));
    let alpha = implies(act.clone(), and(not(a), not(b.clone())));
    let first = if l == 0 {
        nb
    } else {
        let before = Interval::new(0, Some(l), true, !i.left_closed()).expect("l > 0");
        weak_always(before, nb)
    };
    let after = Interval::new(l, None, i.left_closed(), false).expect("unbounded right-open interval");
    Ok(and(
        or(weak_always(Interval::full(), alpha.clone()), weak_until(alpha, and(big_a.clone(), first))),
        weak_always(Interval::full(), implies(big_a, mtl_core::formula::always(after, implies(act, b)))),
    ))
}
