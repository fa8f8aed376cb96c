//! Errors raised when constructing core values.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("empty interval: lower bound {lower} and upper bound {upper}")]
    EmptyInterval { lower: u64, upper: u64 },
    #[error("an interval with an infinite upper end must be right-open")]
    ClosedAtInfinity,
    #[error("point {position} has an empty event set")]
    EmptyEvent { position: usize },
    #[error("point {position} has a negative timestamp")]
    NegativeTime { position: usize },
    #[error("timestamps are not {mode} at position {position}")]
    NonMonotone { position: usize, mode: &'static str },
    #[error("time shift would make timestamp at position {position} negative")]
    NegativeShift { position: usize },
    #[error("alphabets overlap on proposition `{0}`")]
    OverlappingAlphabets(String),
}
