use std::collections::BTreeSet;

use mtl_core::formula::{and_all, atom, iff, weak_always};
use mtl_core::{Formula, Interval, Prop};

/// Whether a definition names a flattened modality or an argument of one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DefRole {
    /// The body is a modality selected by the flattening policy.
    Modal,
    /// The body is a non-atomic argument of such a modality; it holds no targeted modality.
    Argument,
}

/// A temporal definition `□ʷ(witness ↔ body)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TemporalDefinition {
    pub witness: Prop,
    pub body: Formula,
    pub role: DefRole,
}

impl TemporalDefinition {
    pub fn new(witness: impl Into<Prop>, body: Formula, role: DefRole) -> Self {
        Self { witness: witness.into(), body, role }
    }

    /// `□ʷ(witness ↔ body)`.
    pub fn as_formula(&self) -> Formula {
        weak_always(Interval::full(), iff(atom(self.witness.clone()), self.body.clone()))
    }

    /// `(I, a)` when the body is `⋄̄_I a` for a proposition `a`.
    pub fn as_past_eventually(&self) -> Option<(&Interval, &Prop)> {
        match &self.body {
            Formula::PastEventually(i, a) => match a.as_ref() {
                Formula::Atom(p) => Some((i, p)),
                _ => None,
            },
            _ => None,
        }
    }

    /// `(c, f)` when the body is the untimed `c S f` over propositions.
    pub fn as_untimed_since(&self) -> Option<(&Prop, &Prop)> {
        match &self.body {
            Formula::Since(i, c, f) if i.is_full() => match (c.as_ref(), f.as_ref()) {
                (Formula::Atom(c), Formula::Atom(f)) => Some((c, f)),
                _ => None,
            },
            _ => None,
        }
    }
}

/// Result of flattening: `φ_flat = skeleton ∧ ⋀ defs`.
///
/// Definitions are listed innermost first, so a body only mentions witnesses of
/// definitions listed before it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatResult {
    pub skeleton: Formula,
    pub defs: Vec<TemporalDefinition>,
    pub witnesses: BTreeSet<Prop>,
}

impl FlatResult {
    /// `skeleton ∧ ⋀ defs`.
    pub fn as_formula(&self) -> Formula {
        and_all(std::iter::once(self.skeleton.clone()).chain(self.defs.iter().map(|d| d.as_formula())))
    }
}
