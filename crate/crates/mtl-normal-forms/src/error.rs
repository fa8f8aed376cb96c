use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalFormError {
    #[error("the base alphabet is empty")]
    EmptyAlphabet,
    #[error("definition of `{0}` is not an untimed Since over propositions")]
    NotSinceDefinition(String),
    #[error("definition of `{0}` has a timed Since; rewrite it first")]
    TimedSince(String),
    #[error("punctual past interval {0} is outside the supported fragment")]
    PunctualPast(String),
    #[error("definition of `{witness}` mentions `{later}`, which is defined later")]
    OrderingViolation { witness: String, later: String },
}
