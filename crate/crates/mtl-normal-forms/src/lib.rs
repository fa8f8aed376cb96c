//! Formula rewrites shared by the past-elimination reductions: flattening into
//! temporal definitions, the extended and oversampled normal forms, witness marking,
//! splitting timed Since into non-punctual pieces and replacing untimed Since by future
//! constraints.

mod definition;
mod error;
mod flatten;
mod normal;
mod reduction;
mod since;
mod snp;
mod witness;

pub use definition::{DefRole, FlatResult, TemporalDefinition};
pub use error::NormalFormError;
pub use flatten::{flatten, FlattenPolicy};
pub use normal::{act, enf, onf, onf_body};
pub use reduction::{FreshProp, ReductionKind, ReductionResult};
pub use since::{eliminate_since_def, since_constraints, weak_next};
pub use snp::rewrite_snp;
pub use witness::mark_witnesses;
