use std::collections::BTreeSet;

use mtl_core::formula::and_all;
use mtl_core::{AlphabetSplit, Formula, FreshNames, Fragment, Prop, TimedWord};
use mtl_normal_forms::{
    eliminate_since_def, flatten, mark_witnesses, onf, rewrite_snp, DefRole, FlatResult, FlattenPolicy, FreshProp,
    ReductionKind, ReductionResult,
};
use mtl_projections::compose_oversampled;
use mtl_semantics::satisfies;

use crate::bounded::{elim_bounded_past_os, OsEliminationOutput};
use crate::error::OsError;
use crate::unbounded::elim_unbounded_past_os;
use crate::witness::oversample_witness;

/// Everything needed to rebuild the output or to construct witness words.
#[derive(Clone, Debug)]
pub struct OsMeta {
    pub input: Formula,
    pub sigma: BTreeSet<Prop>,
    pub rewritten: Formula,
    pub flat: FlatResult,
    /// `ONF_Σ` of the skeleton, the argument definitions and the Since constraints.
    pub frame: Formula,
    /// Outputs for unbounded past eventualities, keyed by witness.
    pub unbounded: Vec<(Prop, Formula)>,
    pub bounded: Vec<OsEliminationOutput>,
}

impl OsMeta {
    /// The reduced formula, with the named marking group removed from every bounded
    /// elimination when `drop` is given.
    pub fn assemble(&self, drop: Option<&str>) -> Formula {
        and_all(
            std::iter::once(self.frame.clone())
                .chain(self.unbounded.iter().map(|(_, f)| f.clone()))
                .chain(self.bounded.iter().map(|o| if drop.is_some() { o.assemble(drop) } else { o.mark.clone() })),
        )
    }

    /// `W`: the flattening witnesses.
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

    /// Extends a model `ρ` of the input to a model of the output whose oversampled
    /// projection is `ρ`: witnesses are marked exactly, then each bounded elimination
    /// contributes its oversampled word and the words are composed.
    pub fn witness(&self, rho: &TimedWord) -> Result<TimedWord, OsError> {
        if !rho.is_strict() {
            return Err(OsError::WeakWord);
        }
        if let Some(p) = rho.propositions().iter().find(|p| !self.sigma.contains(*p)) {
            return Err(OsError::ForeignProposition(p.clone()));
        }
        if rho.is_empty() {
            return Err(OsError::EmptyWord);
        }
        if !satisfies(rho, &self.input)? {
            return Err(OsError::NotAFormulaModel);
        }
        self.extend(rho)
    }

    /// Marks witnesses exactly and adds every bounded elimination's markings to any
    /// nonempty strictly monotonic word over `Σ`, whether or not it satisfies the input.
    /// The result projects back to `ρ`; it satisfies the output iff `ρ` satisfies the input.
    pub fn extend(&self, rho: &TimedWord) -> Result<TimedWord, OsError> {
        if !rho.is_strict() {
            return Err(OsError::WeakWord);
        }
        if let Some(p) = rho.propositions().iter().find(|p| !self.sigma.contains(*p)) {
            return Err(OsError::ForeignProposition(p.clone()));
        }
        if rho.is_empty() {
            return Err(OsError::EmptyWord);
        }
        let marked = mark_witnesses(rho, &self.flat.defs)?;
        let base: BTreeSet<Prop> = self.sigma.union(&self.flat.witnesses).cloned().collect();
        let mut acc = marked.clone();
        let mut acc_x = BTreeSet::new();
        for out in &self.bounded {
            let w = oversample_witness(&marked, out)?;
            let x = out.fresh_set();
            let mut composed = compose_oversampled(&acc, &w, &base, &acc_x, &x)?;
            acc = composed.swap_remove(0);
            acc_x.extend(x);
        }
        Ok(acc)
    }
}

/// Eliminates all past operators from `φ` over the base alphabet `Σ`, producing a
/// future-only formula `ψ` with `φ = ∃↓X. ψ`.
pub fn reduce_os(phi: &Formula, sigma: &BTreeSet<Prop>) -> Result<ReductionResult<OsMeta>, OsError> {
    if sigma.is_empty() {
        return Err(OsError::EmptyAlphabet);
    }
    match phi.fragment() {
        Fragment::UIOnly | Fragment::UISnp => {}
        other => return Err(OsError::Fragment(other)),
    }
    if let Some(p) = phi.propositions().iter().find(|p| !sigma.contains(*p)) {
        return Err(OsError::ForeignProposition(p.clone()));
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
                unbounded.push((d.witness.clone(), elim_unbounded_past_os(d, sigma)?));
            } else {
                let out = elim_bounded_past_os(d, sigma, &flat.witnesses, &mut names)?;
                fresh.extend(out.fresh_props());
                bounded.push(out);
            }
        } else {
            return Err(OsError::NotPastEventuality(d.witness.clone()));
        }
    }
    let frame = onf(&and_all(frame_parts), sigma)?;
    let meta = OsMeta { input: phi.clone(), sigma: sigma.clone(), rewritten, flat, frame, unbounded, bounded };
    Ok(ReductionResult {
        formula: meta.assemble(None),
        sigma: sigma.clone(),
        fresh,
        kind: ReductionKind::Oversampled,
        meta,
    })
}
