use std::collections::BTreeSet;
use std::fmt;

use mtl_core::{Formula, Prop};

/// Which projection relates models of the output to models of the input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    /// `φ = ∃X. ψ`: models of `ψ` are simple extensions.
    Simple,
    /// `φ = ∃↓X. ψ`: models of `ψ` are oversampled behaviours.
    Oversampled,
}

impl ReductionKind {
    pub fn name(self) -> &'static str {
        match self {
            ReductionKind::Simple => "simple",
            ReductionKind::Oversampled => "oversampled",
        }
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One fresh proposition of a reduction, with the role it plays and the witness (or
/// definition) that owns it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreshProp {
    pub name: Prop,
    pub role: String,
    pub owner: Prop,
}

impl fmt::Display for FreshProp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} role={} owner={}", self.name, self.role, self.owner)
    }
}

/// The output of a past-elimination reduction.
///
/// `fresh` lists every proposition outside `Σ`, flattening witnesses included; `meta`
/// carries whatever the reduction needs to build witness words for models of the input.
#[derive(Clone, Debug)]
pub struct ReductionResult<M> {
    pub formula: Formula,
    pub sigma: BTreeSet<Prop>,
    pub fresh: Vec<FreshProp>,
    pub kind: ReductionKind,
    pub meta: M,
}

impl<M> ReductionResult<M> {
    /// The set `X` of fresh propositions.
    pub fn fresh_set(&self) -> BTreeSet<Prop> {
        self.fresh.iter().map(|p| p.name.clone()).collect()
    }

    /// Manifest text: one line per fresh proposition.
    pub fn manifest(&self) -> String {
        let mut out = String::new();
        for p in &self.fresh {
            out.push_str(&p.to_string());
            out.push('\n');
        }
        out
    }
}
