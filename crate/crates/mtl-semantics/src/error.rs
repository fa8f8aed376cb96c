use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("position {position} is outside the word (length {len})")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("satisfaction is undefined on the empty word")]
    EmptyWord,
    #[error("region classification needs a non-punctual interval, got {0}")]
    PunctualInterval(String),
    #[error("grid step must be positive")]
    NonPositiveGrid,
    #[error("maximum length must be at least 1")]
    ZeroLength,
}
