//! Splits of a proposition set into a base alphabet and an extension alphabet.

use std::collections::BTreeSet;

use crate::error::CoreError;
use crate::formula::Prop;

/// A pair `(Σ, X)` of disjoint proposition sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlphabetSplit {
    sigma: BTreeSet<Prop>,
    ext: BTreeSet<Prop>,
}

impl AlphabetSplit {
    pub fn new(sigma: BTreeSet<Prop>, ext: BTreeSet<Prop>) -> Result<Self, CoreError> {
        if let Some(p) = sigma.intersection(&ext).next() {
            return Err(CoreError::OverlappingAlphabets(p.clone()));
        }
        Ok(Self { sigma, ext })
    }

    /// Convenience constructor from string slices.
    pub fn of(sigma: &[&str], ext: &[&str]) -> Result<Self, CoreError> {
        Self::new(
            sigma.iter().map(|s| s.to_string()).collect(),
            ext.iter().map(|s| s.to_string()).collect(),
        )
    }

    pub fn sigma(&self) -> &BTreeSet<Prop> {
        &self.sigma
    }

    pub fn ext(&self) -> &BTreeSet<Prop> {
        &self.ext
    }

    /// `Σ ∪ X`.
    pub fn all(&self) -> BTreeSet<Prop> {
        self.sigma.union(&self.ext).cloned().collect()
    }
}
