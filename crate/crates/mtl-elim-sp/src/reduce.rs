use std::collections::BTreeSet;

use mtl_core::formula::and_all;
use mtl_core::{AlphabetSplit, Formula, FreshNames, Fragment, Prop, TimedWord};
use mtl_normal_forms::{
    eliminate_since_def, enf, flatten, mark_witnesses, rewrite_snp, DefRole, FlatResult, FlattenPolicy, FreshProp,
    ReductionKind, ReductionResult,
};
use mtl_projections::compose_simple;
use mtl_semantics::satisfies;

use crate::bounded::{elim_bounded_past_sp, SpEliminationOutput};
use crate::error::SpError;
use crate::unbounded::elim_unbounded_past_sp;
use crate::witness::simple_witness;

/// Everything needed to rebuild the output or to construct witness words.
#[derive(Clone, Debug)]
pub struct SpMeta {
    pub input: Formula,
    pub sigma: BTreeSet<Prop>,
    pub rewritten: Formula,
    pub flat: FlatResult,
    /// The skeleton, the argument definitions and the Since constraints.
    pub frame: Formula,
    /// Outputs for unbounded past eventualities, keyed by witness.
    pub unbounded: Vec<(Prop, Formula)>,
    pub bounded: Vec<SpEliminationOutput>,
}

impl SpMeta {
    /// The reduced formula, with the named marking group removed from every bounded
    /// elimination when `drop` is given.
    pub fn assemble(&self, drop: Option<&str>) -> Formula {
        let body = and_all(
            std::iter::once(self.frame.clone())
                .chain(self.unbounded.iter().map(|(_, f)| f.clone()))
                .chain(self.bounded.iter().map(|o| if drop.is_some() { o.assemble(drop) } else { o.mark.clone() })),
        );
        enf(&body, &self.sigma).expect("Σ is nonempty")
    }

    pub fn witnesses(&self) -> &BTreeSet<Prop> {
        &self.flat.witnesses
    }

    /// The split `(Σ, W ∪ X)` relating output models to input models.
    pub fn split(&self) -> AlphabetSplit {
        let mut ext = self.flat.witnesses.clone();
        for o in &self.bounded {
            ext.extend(o.fresh_set());
        }
        AlphabetSplit::new(self.sigma.clone(), ext).expect("fresh names avoid Σ")
    }

    /// Extends a model `ρ` of the input to a model of the output whose simple
    /// projection is `ρ`: witnesses are marked exactly, then each bounded elimination
    /// marks its fresh propositions and the markings are combined.
    pub fn witness(&self, rho: &TimedWord) -> Result<TimedWord, SpError> {
        if !rho.is_strict() {
            return Err(SpError::WeakWord);
        }
        if let Some(p) = rho.propositions().iter().find(|p| !self.sigma.contains(*p)) {
            return Err(SpError::ForeignProposition(p.clone()));
        }
        if rho.is_empty() {
            return Err(SpError::EmptyWord);
        }
        if !satisfies(rho, &self.input)? {
            return Err(SpError::NotAFormulaModel);
        }
        self.extend(rho)
    }

    /// Marks witnesses exactly and adds every bounded elimination's markings to any
    /// nonempty strictly monotonic word over `Σ`, whether or not it satisfies the input.
    /// The result projects back to `ρ`; it satisfies the output iff `ρ` satisfies the input.
    pub fn extend(&self, rho: &TimedWord) -> Result<TimedWord, SpError> {
        if !rho.is_strict() {
            return Err(SpError::WeakWord);
        }
        if let Some(p) = rho.propositions().iter().find(|p| !self.sigma.contains(*p)) {
            return Err(SpError::ForeignProposition(p.clone()));
        }
        if rho.is_empty() {
            return Err(SpError::EmptyWord);
        }
        let marked = mark_witnesses(rho, &self.flat.defs)?;
        let base: BTreeSet<Prop> = self.sigma.union(&self.flat.witnesses).cloned().collect();
        let mut acc = marked.clone();
        let mut acc_x = BTreeSet::new();
        for out in &self.bounded {
            let w = simple_witness(&marked, out)?;
            let x = out.fresh_set();
            acc = compose_simple(&acc, &w, &base, &acc_x, &x)?;
            acc_x.extend(x);
        }
        Ok(acc)
    }
}

/// Eliminates all past operators from `φ` over the base alphabet `Σ`, producing a
/// future-only formula `ψ` with `φ = ∃X. ψ` modulo simple projections.
pub fn reduce_sp(phi: &Formula, sigma: &BTreeSet<Prop>) -> Result<ReductionResult<SpMeta>, SpError> {
    if sigma.is_empty() {
        return Err(SpError::EmptyAlphabet);
    }
    match phi.fragment() {
        Fragment::UIOnly | Fragment::UISnp => {}
        other => return Err(SpError::Fragment(other)),
    }
    if let Some(p) = phi.propositions().iter().find(|p| !sigma.contains(*p)) {
        return Err(SpError::ForeignProposition(p.clone()));
    }
    let rewritten = rewrite_snp(phi)?;
    let mut names = FreshNames::new(sigma.iter().cloned());
    let flat = flatten(&rewritten, FlattenPolicy::PastOnly, &mut names);

    let mut frame_parts = vec![flat.skeleton.clone()];
    let mut unbounded = Vec::new();
    let mut bounded = Vec::new();
    let mut fresh = Vec::new();
    for d in &flat.defs {
        let role = match d.role {
            DefRole::Modal => "witness",
            DefRole::Argument => "argument",
        };
        fresh.push(FreshProp { name: d.witness.clone(), role: role.to_string(), owner: d.witness.clone() });
        if d.role == DefRole::Argument || !d.body.is_past() {
            frame_parts.push(d.as_formula());
        } else if d.as_untimed_since().is_some() {
            frame_parts.push(eliminate_since_def(d)?);
        } else if let Some((i, _)) = d.as_past_eventually() {
            if i.is_unbounded() {
                unbounded.push((d.witness.clone(), elim_unbounded_past_sp(d)?));
            } else {
                let out = elim_bounded_past_sp(d, &mut names)?;
                fresh.extend(out.fresh_props());
                bounded.push(out);
            }
        } else {
            return Err(SpError::NotPastEventuality(d.witness.clone()));
        }
    }
    let meta = SpMeta {
        input: phi.clone(),
        sigma: sigma.clone(),
        rewritten,
        flat,
        frame: and_all(frame_parts),
        unbounded,
        bounded,
    };
    Ok(ReductionResult { formula: meta.assemble(None), sigma: sigma.clone(), fresh, kind: ReductionKind::Simple, meta })
}
