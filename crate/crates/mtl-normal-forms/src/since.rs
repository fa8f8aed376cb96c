use mtl_core::formula::{and, and_all, atom, implies, next, not, weak_always};
use mtl_core::{Formula, Interval};

use crate::definition::TemporalDefinition;
use crate::error::NormalFormError;

/// Weak next `¬O¬φ`: `φ` holds at the next point, if there is one.
pub fn weak_next(phi: Formula) -> Formula {
    not(next(not(phi)))
}

/// Replaces `□ʷ(r ↔ c S f)` by the future-only conjunction `ν_r`:
///
/// ```text
/// □ʷ(f → Oʷ r) ∧ ¬r ∧ □ʷ((r ∧ c) → Oʷ r) ∧ □ʷ((r ∧ ¬c ∧ ¬f) → Oʷ ¬r) ∧ □ʷ((¬r ∧ ¬f) → Oʷ ¬r)
/// ```
///
/// where `Oʷ` is [`weak_next`], so the constraints are vacuous at the last point.
pub fn eliminate_since_def(def: &TemporalDefinition) -> Result<Formula, NormalFormError> {
    let (c, f) = match &def.body {
        Formula::Since(i, c, f) if i.is_full() => (c.as_ref(), f.as_ref()),
        Formula::Since(..) => return Err(NormalFormError::TimedSince(def.witness.clone())),
        _ => return Err(NormalFormError::NotSinceDefinition(def.witness.clone())),
    };
    if !c.is_future_only() || !f.is_future_only() {
        return Err(NormalFormError::NotSinceDefinition(def.witness.clone()));
    }
    Ok(since_constraints(&atom(def.witness.clone()), c, f))
}

/// `ν_r` for arbitrary future-only arguments `c` and `f`.
pub fn since_constraints(r: &Formula, c: &Formula, f: &Formula) -> Formula {
    let g = |x: Formula| weak_always(Interval::full(), x);
    and_all([
        g(implies(f.clone(), weak_next(r.clone()))),
        not(r.clone()),
        g(implies(and(r.clone(), c.clone()), weak_next(r.clone()))),
        g(implies(and_all([r.clone(), not(c.clone()), not(f.clone())]), weak_next(not(r.clone())))),
        g(implies(and(not(r.clone()), not(f.clone())), weak_next(not(r.clone())))),
    ])
}
