//! Past elimination for MTL by oversampling.
//!
//! A formula of MTL with non-punctual past is flattened into temporal definitions.
//! Untimed Since definitions become future constraints, unbounded past eventualities
//! are replaced by an equivalent future formula over oversampled behaviours and bounded
//! ones by a marking conjunction over fresh propositions whose models may carry extra,
//! non-action points. The result is future-only and its size does not depend on the
//! interval constants.

mod bounded;
mod error;
mod reduce;
mod unbounded;
mod witness;

pub use bounded::{elim_bounded_past_os, OsEliminationOutput, OsFresh, OsParams, MARK_GROUPS};
pub use error::OsError;
pub use reduce::{reduce_os, OsMeta};
pub use unbounded::elim_unbounded_past_os;
pub use witness::oversample_witness;
