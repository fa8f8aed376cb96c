use std::collections::BTreeSet;

use mtl_core::formula::{and, and_all, atom, implies, last_point, not, or_all, weak_always};
use mtl_core::{Formula, Interval, Prop};

use crate::error::NormalFormError;

/// `act = ⋁ Σ`.
pub fn act(sigma: &BTreeSet<Prop>) -> Result<Formula, NormalFormError> {
    if sigma.is_empty() {
        return Err(NormalFormError::EmptyAlphabet);
    }
    Ok(or_all(sigma.iter().map(|p| atom(p.clone()))))
}

/// `ENF_Σ(φ) = φ ∧ □ʷ(⋁ Σ)`: every model is a simple extension of a word over `Σ`.
pub fn enf(phi: &Formula, sigma: &BTreeSet<Prop>) -> Result<Formula, NormalFormError> {
    Ok(and(phi.clone(), weak_always(Interval::full(), act(sigma)?)))
}

/// `ONF_Σ(ψ)`: relativizes every modality to action points and conjoins
/// `act ∧ (□⊥ → act)`. Both conjuncts are evaluated at the first point, so the last
/// point is constrained only in one-point words; oversampled behaviours are assumed
/// rather than enforced.
pub fn onf(psi: &Formula, sigma: &BTreeSet<Prop>) -> Result<Formula, NormalFormError> {
    let a = act(sigma)?;
    let body = onf_body(psi, sigma, &a);
    Ok(and_all([body, a.clone(), implies(last_point(), a)]))
}

/// The recursive part of [`onf`], without the outer framing conjuncts.
pub fn onf_body(f: &Formula, sigma: &BTreeSet<Prop>, act: &Formula) -> Formula {
    let rec = |g: &Formula| onf_body(g, sigma, act);
    let guard = |g: &Formula| implies(act.clone(), rec(g));
    let at_act = |g: &Formula| and(rec(g), act.clone());
    match f {
        Formula::True | Formula::False => f.clone(),
        Formula::Atom(p) if sigma.contains(p) => and(f.clone(), act.clone()),
        Formula::Atom(_) => f.clone(),
        Formula::Not(a) => not(rec(a)),
        Formula::And(..) | Formula::Or(..) | Formula::Implies(..) => {
            f.with_children(f.children().into_iter().map(rec).collect())
        }
        Formula::Until(i, a, b) => Formula::Until(i.clone(), Box::new(guard(a)), Box::new(at_act(b))),
        Formula::Since(i, a, b) => Formula::Since(i.clone(), Box::new(guard(a)), Box::new(at_act(b))),
        Formula::WeakUntil(a, b) => Formula::WeakUntil(Box::new(guard(a)), Box::new(at_act(b))),
        Formula::Eventually(i, a) => Formula::Eventually(i.clone(), Box::new(at_act(a))),
        Formula::PastEventually(i, a) => Formula::PastEventually(i.clone(), Box::new(at_act(a))),
        Formula::WeakEventually(i, a) => Formula::WeakEventually(i.clone(), Box::new(at_act(a))),
        Formula::Always(i, a) => Formula::Always(i.clone(), Box::new(guard(a))),
        Formula::Historically(i, a) => Formula::Historically(i.clone(), Box::new(guard(a))),
        Formula::WeakAlways(i, a) => Formula::WeakAlways(i.clone(), Box::new(guard(a))),
        Formula::Next(a) => Formula::Until(Interval::full(), Box::new(not(act.clone())), Box::new(at_act(a))),
    }
}
