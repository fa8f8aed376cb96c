//! Size comparison of the two reductions.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use mtl_core::formula::{and, atom, eventually, past_eventually};
use mtl_core::{Formula, Interval, Prop};
use mtl_syntax::print_formula;

use crate::error::HarnessError;
use crate::reduction::{Method, Reduced};

/// Counts on the unexpanded syntax tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SizeCounts {
    pub modal: usize,
    pub nodes: usize,
    pub sigma: usize,
    pub fresh: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizeReport {
    pub formula: String,
    pub input: SizeCounts,
    pub simple: SizeCounts,
    pub oversampled: SizeCounts,
}

impl fmt::Display for SizeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "formula: {}", self.formula)?;
        writeln!(f, "{:<12} {:>6} {:>6} {:>4} {:>6}", "", "modal", "nodes", "|Σ|", "|X|")?;
        for (name, c) in [("input", &self.input), ("simple", &self.simple), ("oversample", &self.oversampled)] {
            writeln!(f, "{:<12} {:>6} {:>6} {:>4} {:>6}", name, c.modal, c.nodes, c.sigma, c.fresh)?;
        }
        Ok(())
    }
}

/// Modal and node counts of `φ` and of both reductions over `Σ`.
pub fn size_report(phi: &Formula, sigma: &BTreeSet<Prop>) -> Result<SizeReport, HarnessError> {
    let counts = |method| -> Result<SizeCounts, HarnessError> {
        let r = Reduced::new(phi, sigma, method)?;
        Ok(SizeCounts {
            modal: r.formula().modal_count(),
            nodes: r.formula().node_count(),
            sigma: sigma.len(),
            fresh: r.fresh().len(),
        })
    };
    Ok(SizeReport {
        formula: print_formula(phi),
        input: SizeCounts { modal: phi.modal_count(), nodes: phi.node_count(), sigma: sigma.len(), fresh: 0 },
        simple: counts(Method::Simple)?,
        oversampled: counts(Method::Oversampled)?,
    })
}

/// `◇(a ∧ ⋄̄_[l,l+1) b)`.
pub fn trend_formula(l: u64) -> Formula {
    eventually(Interval::full(), and(atom("a"), past_eventually(Interval::closed_open(l, l + 1), atom("b"))))
}

/// One row of the size trend: `(l, simple modal count, oversampled modal count)`.
pub fn size_trend(ls: impl IntoIterator<Item = u64>) -> Result<Vec<(u64, usize, usize)>, HarnessError> {
    let sigma: BTreeSet<Prop> = ["a", "b"].iter().map(|s| s.to_string()).collect();
    ls.into_iter()
        .map(|l| {
            let r = size_report(&trend_formula(l), &sigma)?;
            Ok((l, r.simple.modal, r.oversampled.modal))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use mtl_syntax::parse_formula;

    fn sigma() -> BTreeSet<Prop> {
        ["a", "b"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn past_free_formulas_stay_small() {
        let r = size_report(&parse_formula("a U[1,2] F b").unwrap(), &sigma()).unwrap();
        assert_eq!(r.simple.fresh, 0);
        assert_eq!(r.oversampled.fresh, 0);
        assert!(r.simple.modal <= r.input.modal + 2);
        assert!(r.oversampled.modal <= r.input.modal + 2);
    }

    #[test]
    fn two_definitions_add_up() {
        let one = size_report(&parse_formula("F (a & P[1,2) b)").unwrap(), &sigma()).unwrap();
        let other = size_report(&parse_formula("F (b & P[1,2) a)").unwrap(), &sigma()).unwrap();
        let both = size_report(&parse_formula("F (a & P[1,2) b) & F (b & P[1,2) a)").unwrap(), &sigma()).unwrap();
        for pick in [|r: &SizeReport| r.simple.modal, |r: &SizeReport| r.oversampled.modal] {
            let sum = pick(&one) + pick(&other);
            let got = pick(&both);
            assert!(got + 4 >= sum && got <= sum, "{got} vs {sum}");
        }
    }

    #[test]
    fn trend_is_linear_and_constant() {
        let rows = size_trend(2..=6).unwrap();
        let step = rows[1].1 - rows[0].1;
        assert!(step > 0);
        for (k, row) in rows.iter().enumerate() {
            assert_eq!(row.1, rows[0].1 + step * k);
            assert_eq!(row.2, rows[0].2);
        }
    }
}
