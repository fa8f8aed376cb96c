use mtl_core::{CoreError, Fragment};
use mtl_normal_forms::NormalFormError;
use mtl_projections::ProjectionError;
use mtl_semantics::SemanticsError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpError {
    #[error("the base alphabet is empty")]
    EmptyAlphabet,
    #[error("definition of `{0}` is not a past eventuality over a proposition")]
    NotPastEventuality(String),
    #[error("interval {0} is unbounded; use the unbounded elimination")]
    UnboundedInterval(String),
    #[error("interval {0} is bounded; use the bounded elimination")]
    BoundedInterval(String),
    #[error("punctual past interval {0} is outside the supported fragment")]
    PunctualInterval(String),
    #[error("gap {gap} is outside the middle case for interval {interval}")]
    OutOfCase { gap: String, interval: String },
    #[error("formula is in fragment {0}, outside MTL[U_I, S_np]")]
    Fragment(Fragment),
    #[error("proposition `{0}` of the formula is not in the base alphabet")]
    ForeignProposition(String),
    #[error("the witness construction needs a strictly monotonic word")]
    WeakWord,
    #[error("the input word is empty")]
    EmptyWord,
    #[error("the input word is not a model of the definition of `{0}`")]
    NotAModel(String),
    #[error("the input word is not a model of the formula")]
    NotAFormulaModel,
    #[error(transparent)]
    NormalForm(#[from] NormalFormError),
    #[error(transparent)]
    Projection(#[from] ProjectionError),
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
    #[error(transparent)]
    Core(#[from] CoreError),
}
