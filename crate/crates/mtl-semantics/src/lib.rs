//! Pointwise semantics of MTL over finite timed words.
//!
//! Until and Since are strict: the witness lies strictly after (before) the current
//! position, at a time distance inside the interval, and every position strictly in
//! between satisfies the left argument.

mod axis;
mod error;
mod eval;
mod parallel;
mod region;
mod sat;

pub use error::SemanticsError;
pub use eval::{eval, eval_positions, satisfies, CompiledFormula};
pub use parallel::{requested_workers, with_workers, WORKERS_ENV};
pub use region::{region_classify, RegionClass};
pub use sat::{bounded_models, bounded_sat, GridSpace, GridWords};
