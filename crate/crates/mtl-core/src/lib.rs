//! Shared domain types for pointwise metric temporal logic over finite timed words.
//!
//! Intervals carry natural-number endpoints, timestamps are exact rationals and
//! formulas keep derived operators as first-class nodes that expand canonically into
//! Until and Since.

pub mod alphabet;
pub mod error;
pub mod formula;
pub mod fresh;
pub mod interval;
pub mod time;
pub mod word;

pub use alphabet::AlphabetSplit;
pub use error::CoreError;
pub use formula::{classify_fragment, propositions_of, Formula, Fragment, Prop};
pub use fresh::FreshNames;
pub use interval::Interval;
pub use time::{rat, Time};
pub use word::{time_shift, Monotonicity, Point, TimedWord};
