//! Text syntax for MTL formulas (`.mtl`) and timed words (`.tw`).
//!
//! Formulas use ASCII operator names: `F`, `P`, `G`, `H`, `Fw`, `Gw`, `O` as unary
//! modalities, `U`, `S`, `Uw` as binary ones, with an optional interval such as
//! `[0,3]` or `(1,inf)`. Words are whitespace-separated points `{p,q}@t`. Both formats
//! accept `//` line comments.

mod error;
mod lexer;
mod parser;
mod printer;
mod word;

pub use error::{SourceSpan, SyntaxError, SyntaxErrorKind};
pub use parser::parse_formula;
pub use printer::print_formula;
pub use word::{parse_time, parse_timed_word, print_timed_word};

/// Keywords that can never be used as proposition names.
pub const KEYWORDS: &[&str] = &["true", "false", "U", "S", "Uw", "F", "P", "G", "H", "Fw", "Gw", "O"];

/// True iff `name` is a valid proposition identifier (and not a keyword).
pub fn is_valid_prop(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && !KEYWORDS.contains(&name)
}
