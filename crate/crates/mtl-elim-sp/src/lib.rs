//! Past elimination for MTL modulo simple projections.
//!
//! Bounded past eventualities are replaced by marking formulas whose models are simple
//! extensions of the input: fresh propositions are added at existing points only. The
//! stretches where the witness must fail are cut out with integer-length intervals, so
//! the output grows linearly with the lower interval constant. Non-punctual intervals
//! stay non-punctual, so MITL inputs give MITL outputs.

mod bounded;
mod error;
mod reduce;
mod region;
mod unbounded;
mod witness;

pub use bounded::{elim_bounded_past_sp, SpEliminationOutput, SpFresh, SpParams, SP_MARK_GROUPS};
pub use error::SpError;
pub use reduce::{reduce_sp, SpMeta};
pub use region::{compute_region_pair, RegionIntervalPair, SpShape, TimeInterval};
pub use unbounded::elim_unbounded_past_sp;
pub use witness::simple_witness;
