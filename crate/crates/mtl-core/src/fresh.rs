//! Deterministic generation of fresh proposition names.

use std::collections::BTreeSet;

use crate::formula::Prop;

/// Issues names that avoid a reserved set and every name issued before.
///
/// Names are derived deterministically, so repeated runs on the same input produce the
/// same output. A candidate that collides is suffixed with `_` until it is unique.
#[derive(Clone, Debug, Default)]
pub struct FreshNames {
    taken: BTreeSet<Prop>,
    counter: usize,
}

impl FreshNames {
    pub fn new(reserved: impl IntoIterator<Item = Prop>) -> Self {
        Self { taken: reserved.into_iter().collect(), counter: 0 }
    }

    /// Next witness name `w1, w2, ...`.
    pub fn witness(&mut self) -> Prop {
        loop {
            self.counter += 1;
            let candidate = format!("w{}", self.counter);
            if self.taken.insert(candidate.clone()) {
                return candidate;
            }
        }
    }

    /// A name derived from a role tag and an owner, e.g. `beg_w2`.
    pub fn derived(&mut self, role: &str, owner: &str) -> Prop {
        let mut candidate = format!("{role}_{owner}");
        while !self.taken.insert(candidate.clone()) {
            candidate.push('_');
        }
        candidate
    }

    /// Marks an externally chosen name as taken.
    pub fn reserve(&mut self, name: &str) {
        self.taken.insert(name.to_string());
    }

    pub fn is_taken(&self, name: &str) -> bool {
        self.taken.contains(name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skips_reserved_names() {
        let mut f = FreshNames::new(["w1".to_string(), "c_w2".to_string()]);
        assert_eq!(f.witness(), "w2");
        assert_eq!(f.derived("c", "w2"), "c_w2_");
        assert_eq!(f.derived("c", "w2"), "c_w2__");
        assert_eq!(f.witness(), "w3");
    }
}
