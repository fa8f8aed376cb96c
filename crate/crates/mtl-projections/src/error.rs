use mtl_core::CoreError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjectionError {
    #[error("proposition `{prop}` at position {position} is in neither alphabet")]
    ForeignProposition { position: usize, prop: String },
    #[error("position {position} carries no base proposition, so the word is not a simple extension")]
    NotSimpleExtension { position: usize },
    #[error("the first and last positions must be action points")]
    NotOversampledBehaviour,
    #[error("the base projections differ: {0}")]
    ProjectionMismatch(String),
    #[error("extension alphabets overlap on `{0}`")]
    OverlappingAlphabets(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}
