//! A common view of the two reductions.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use mtl_core::{AlphabetSplit, Formula, Prop, TimedWord};
use mtl_elim_os::{reduce_os, OsMeta};
use mtl_elim_sp::{reduce_sp, SpMeta};
use mtl_normal_forms::{FreshProp, ReductionResult};
use mtl_projections::{is_oversampled_behaviour, is_simple_extension, oversampled_project, simple_project};

use crate::error::HarnessError;

/// Which past-elimination reduction to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Simple,
    Oversampled,
}

impl Method {
    pub const ALL: [Method; 2] = [Method::Simple, Method::Oversampled];

    pub fn name(self) -> &'static str {
        match self {
            Method::Simple => "simple",
            Method::Oversampled => "oversample",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "simple" | "sp" => Ok(Method::Simple),
            "oversample" | "oversampled" | "os" => Ok(Method::Oversampled),
            other => Err(HarnessError::UnknownMethod(other.to_string())),
        }
    }
}

/// The output of either reduction, with the operations the test engines need.
#[derive(Clone, Debug)]
pub enum Reduced {
    Simple(ReductionResult<SpMeta>),
    Oversampled(ReductionResult<OsMeta>),
}

impl Reduced {
    pub fn new(phi: &Formula, sigma: &BTreeSet<Prop>, method: Method) -> Result<Self, HarnessError> {
        Ok(match method {
            Method::Simple => Reduced::Simple(reduce_sp(phi, sigma)?),
            Method::Oversampled => Reduced::Oversampled(reduce_os(phi, sigma)?),
        })
    }

    pub fn method(&self) -> Method {
        match self {
            Reduced::Simple(_) => Method::Simple,
            Reduced::Oversampled(_) => Method::Oversampled,
        }
    }

    pub fn formula(&self) -> &Formula {
        match self {
            Reduced::Simple(r) => &r.formula,
            Reduced::Oversampled(r) => &r.formula,
        }
    }

    pub fn sigma(&self) -> &BTreeSet<Prop> {
        match self {
            Reduced::Simple(r) => &r.sigma,
            Reduced::Oversampled(r) => &r.sigma,
        }
    }

    pub fn fresh(&self) -> &[FreshProp] {
        match self {
            Reduced::Simple(r) => &r.fresh,
            Reduced::Oversampled(r) => &r.fresh,
        }
    }

    pub fn manifest(&self) -> String {
        match self {
            Reduced::Simple(r) => r.manifest(),
            Reduced::Oversampled(r) => r.manifest(),
        }
    }

    /// The split `(Σ, W ∪ X)`.
    pub fn split(&self) -> AlphabetSplit {
        match self {
            Reduced::Simple(r) => r.meta.split(),
            Reduced::Oversampled(r) => r.meta.split(),
        }
    }

    /// The propositions outside `Σ`: flattening witnesses and elimination markers.
    pub fn extension_alphabet(&self) -> BTreeSet<Prop> {
        self.fresh().iter().map(|p| p.name.clone()).collect()
    }

    /// The flattening witnesses `W`.
    pub fn witnesses(&self) -> BTreeSet<Prop> {
        self.fresh().iter().filter(|p| p.name == p.owner).map(|p| p.name.clone()).collect()
    }

    /// The witness-chain extension of a model of the input.
    pub fn witness(&self, rho: &TimedWord) -> Result<TimedWord, HarnessError> {
        Ok(match self {
            Reduced::Simple(r) => r.meta.witness(rho)?,
            Reduced::Oversampled(r) => r.meta.witness(rho)?,
        })
    }

    /// The witness-chain extension of any word over `Σ`, model or not.
    pub fn extend(&self, rho: &TimedWord) -> Result<TimedWord, HarnessError> {
        Ok(match self {
            Reduced::Simple(r) => r.meta.extend(rho)?,
            Reduced::Oversampled(r) => r.meta.extend(rho)?,
        })
    }

    /// Whether `w` is an oversampled behaviour over the split.
    pub fn is_behaviour(&self, w: &TimedWord) -> bool {
        is_oversampled_behaviour(w, &self.split()).unwrap_or(false)
    }

    /// The projection matching the reduction, or an error when `w` is not a simple
    /// extension (respectively an oversampled behaviour) over the split.
    pub fn project(&self, w: &TimedWord) -> Result<TimedWord, HarnessError> {
        let split = self.split();
        match self {
            Reduced::Simple(_) => {
                if !is_simple_extension(w, &split)? {
                    return Err(mtl_projections::ProjectionError::NotSimpleExtension { position: 0 }.into());
                }
                Ok(simple_project(w, &split)?)
            }
            Reduced::Oversampled(_) => {
                if !is_oversampled_behaviour(w, &split)? {
                    return Err(mtl_projections::ProjectionError::NotOversampledBehaviour.into());
                }
                Ok(oversampled_project(w, &split)?.0)
            }
        }
    }

    /// Names of the marking groups present in at least one bounded elimination.
    pub fn mark_groups(&self) -> BTreeSet<String> {
        match self {
            Reduced::Simple(r) => r.meta.bounded.iter().flat_map(|o| o.groups.iter().map(|(n, _)| n.clone())).collect(),
            Reduced::Oversampled(r) => {
                r.meta.bounded.iter().flat_map(|o| o.groups.iter().map(|(n, _)| n.clone())).collect()
            }
        }
    }

    /// The reduced formula with the named marking group removed from every bounded
    /// elimination.
    pub fn without_group(&self, group: &str) -> Formula {
        match self {
            Reduced::Simple(r) => r.meta.assemble(Some(group)),
            Reduced::Oversampled(r) => r.meta.assemble(Some(group)),
        }
    }
}
