use std::collections::{BTreeSet, HashMap};

use mtl_core::formula::{atom, not, past_eventually};
use mtl_core::{Formula, FreshNames, Prop};

use crate::definition::{DefRole, FlatResult, TemporalDefinition};

/// Which modalities flattening replaces by witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FlattenPolicy {
    /// `⋄̄_I`, `⊟_I` and `S_I`. `⊟_I φ` is treated as `¬⋄̄_I ¬φ`.
    PastOnly,
    /// `S_I` only.
    SinceOnly,
    /// Every temporal modality.
    All,
}

impl FlattenPolicy {
    fn targets(self, f: &Formula) -> bool {
        match self {
            FlattenPolicy::PastOnly => matches!(f, Formula::PastEventually(..) | Formula::Since(..)),
            FlattenPolicy::SinceOnly => matches!(f, Formula::Since(..)),
            FlattenPolicy::All => f.is_modal(),
        }
    }
}

struct Flattener<'a> {
    policy: FlattenPolicy,
    fresh: &'a mut FreshNames,
    defs: Vec<TemporalDefinition>,
    witnesses: BTreeSet<Prop>,
    modal_memo: HashMap<Formula, Prop>,
    arg_memo: HashMap<Formula, Prop>,
}

impl Flattener<'_> {
    fn visit(&mut self, f: &Formula) -> Formula {
        if let Formula::Historically(i, x) = f {
            if self.policy != FlattenPolicy::SinceOnly {
                return self.visit(&not(past_eventually(i.clone(), not((**x).clone()))));
            }
        }
        if !self.policy.targets(f) {
            let kids = f.children().into_iter().map(|c| self.visit(c)).collect();
            return f.with_children(kids);
        }
        if let Some(w) = self.modal_memo.get(f) {
            return atom(w.clone());
        }
        let name = self.fresh.witness();
        self.witnesses.insert(name.clone());
        let kids: Vec<Formula> = f.children().into_iter().map(|c| self.visit(c)).collect();
        let kids = kids.into_iter().map(|k| self.atomize(k)).collect();
        let body = f.with_children(kids);
        self.defs.push(TemporalDefinition::new(name.clone(), body, DefRole::Modal));
        self.modal_memo.insert(f.clone(), name.clone());
        atom(name)
    }

    fn atomize(&mut self, arg: Formula) -> Formula {
        if matches!(arg, Formula::Atom(_)) {
            return arg;
        }
        if let Some(w) = self.arg_memo.get(&arg) {
            return atom(w.clone());
        }
        let name = self.fresh.witness();
        self.witnesses.insert(name.clone());
        self.defs.push(TemporalDefinition::new(name.clone(), arg.clone(), DefRole::Argument));
        self.arg_memo.insert(arg, name.clone());
        atom(name)
    }
}

/// Replaces every modality selected by `policy` with a fresh witness.
///
/// Witnesses are named in pre-order (outermost first), definitions are listed innermost
/// first, and structurally equal subformulas share a witness. Arguments of a replaced
/// modality that are not propositions get their own [`DefRole::Argument`] definitions.
/// The propositions of `phi` are reserved in `fresh` before any name is issued.
pub fn flatten(phi: &Formula, policy: FlattenPolicy, fresh: &mut FreshNames) -> FlatResult {
    for p in phi.propositions() {
        fresh.reserve(&p);
    }
    let mut fl = Flattener {
        policy,
        fresh,
        defs: Vec::new(),
        witnesses: BTreeSet::new(),
        modal_memo: HashMap::new(),
        arg_memo: HashMap::new(),
    };
    let skeleton = fl.visit(phi);
    FlatResult { skeleton, defs: fl.defs, witnesses: fl.witnesses }
}
