//! The regression corpus of formulas over `Σ = {a, b}`.

use std::collections::BTreeSet;

use mtl_core::{Formula, Prop};
use mtl_syntax::parse_formula;

/// Formulas with at most two past operators and constants at most 4, all in the
/// fragment accepted by both reductions.
pub const CORPUS: [&str; 24] = [
    "F (a & P[1,2) b)",
    "a U[0,3] (b S P[0,1] a)",
    "G (b -> P(0,2] a)",
    "F[0,2] (b & !P[0,1) a)",
    "F (a & P[1,inf) b)",
    "G (a -> (b S[1,2] a))",
    "H[0,1] (a | b) | F (b & P(0,1) a)",
    "a & G (b -> P[2,3] a)",
    "F (a & P[0,2) b)",
    "G (a -> !P(0,1] a)",
    "F (a & P[3,4] b)",
    "F (b & P(1,3) a & !P[0,1) b)",
    "G (b -> (a S b))",
    "F (a & (b S[0,2) a))",
    "F[1,3] (a & P[1,inf) b)",
    "G[0,2] (a -> P(0,1) b) | F b",
    "F (b & H[0,1] b)",
    "(a U[1,2] b) & F (b & P(2,4) a)",
    "F (a & P(0,inf) (b & P(0,1] a))",
    "G (b -> (P[1,3) a | P(0,1) b))",
    "F (a & !P[0,2] b) & F b",
    "F (b S[1,inf) a)",
    "F (a & P[2,3) (a | b))",
    "F[1,1] a | F (b & P[1,2] a)",
];

/// The base alphabet of the corpus.
pub fn corpus_sigma() -> BTreeSet<Prop> {
    ["a", "b"].iter().map(|s| s.to_string()).collect()
}

/// The parsed corpus, paired with its source text.
pub fn corpus() -> Vec<(String, Formula)> {
    CORPUS.iter().map(|s| (s.to_string(), parse_formula(s).expect("corpus formulas parse"))).collect()
}
