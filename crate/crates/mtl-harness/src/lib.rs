//! Differential testing of the past-elimination reductions against the evaluator,
//! size reports, separation test vectors and exhaustive oracle checks.

pub mod corpus;
mod error;
pub mod fuzz;
pub mod laws;
pub mod mutation;
pub mod oracle;
pub mod reduction;
pub mod sample;
pub mod size;
pub mod vectors;

pub use corpus::{corpus, corpus_sigma, CORPUS};
pub use error::HarnessError;
pub use fuzz::{fuzz_equisat, fuzz_with, Counterexample, FuzzConfig, FuzzReport, Outcome, Scorer, Tally, TrialRecord};
pub use laws::{composition_laws, LawReport};
pub use mutation::{mark_groups, mutation_search, MutationOutcome};
pub use oracle::{bounded_intervals, region_oracle, OracleReport};
pub use reduction::{Method, Reduced};
pub use size::{size_report, size_trend, trend_formula, SizeCounts, SizeReport};
pub use vectors::{separation_vectors, SeparationCase, SeparationVectors, VectorParams};
