//! Extensions of timed words by fresh propositions and the projections that erase them.
//!
//! A `(Σ, X)`-simple extension keeps every position an action point (its event meets
//! `Σ`). An oversampled behaviour may add non-action points between action points; its
//! projection deletes them. Compositions glue two extensions of the same base word.

mod compose;
mod error;
mod project;

pub use compose::{compose_oversampled, compose_simple};
pub use error::ProjectionError;
pub use project::{
    is_oversampled_behaviour, is_simple_extension, oversampled_project, simple_project, ProjectionMap,
};
