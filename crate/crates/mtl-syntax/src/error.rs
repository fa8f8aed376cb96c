use std::fmt;

use thiserror::Error;

/// Byte offsets `[start, end)` into the parsed text.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
}

impl SourceSpan {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(start <= end);
        Self { start, end }
    }

    pub fn point(at: usize) -> Self {
        Self { start: at, end: at }
    }

    /// Smallest span covering both.
    pub fn join(self, other: SourceSpan) -> Self {
        Self { start: self.start.min(other.start), end: self.end.max(other.end) }
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SyntaxErrorKind {
    Lexical,
    Syntax,
    MalformedInterval,
    EmptyEvent,
    NonMonotone,
    NegativeTime,
}

/// A parse diagnostic carrying the offending span.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{message} at bytes {span}")]
pub struct SyntaxError {
    pub kind: SyntaxErrorKind,
    pub span: SourceSpan,
    pub message: String,
}

impl SyntaxError {
    pub fn new(kind: SyntaxErrorKind, span: SourceSpan, message: impl Into<String>) -> Self {
        Self { kind, span, message: message.into() }
    }

    /// Renders the diagnostic with 1-based line and column information.
    pub fn render(&self, source: &str) -> String {
        let start = self.span.start.min(source.len());
        let prefix = &source[..floor_char_boundary(source, start)];
        let line = prefix.matches('\n').count() + 1;
        let col = prefix.rsplit('\n').next().map(|s| s.chars().count()).unwrap_or(0) + 1;
        format!("{}:{}: {}", line, col, self.message)
    }
}

fn floor_char_boundary(s: &str, mut i: usize) -> usize {
    while i > 0 && !s.is_char_boundary(i) {
        i -= 1;
    }
    i
}
