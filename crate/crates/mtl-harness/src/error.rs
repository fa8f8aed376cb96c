use mtl_core::CoreError;
use mtl_elim_os::OsError;
use mtl_elim_sp::SpError;
use mtl_projections::ProjectionError;
use mtl_semantics::SemanticsError;
use mtl_syntax::SyntaxError;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum HarnessError {
    #[error("the base alphabet is empty")]
    EmptyAlphabet,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("unknown method `{0}` (expected `simple` or `oversample`)")]
    UnknownMethod(String),
    #[error(transparent)]
    Oversampled(#[from] OsError),
    #[error(transparent)]
    Simple(#[from] SpError),
    #[error(transparent)]
    Projection(#[from] ProjectionError),
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Core(#[from] CoreError),
}
