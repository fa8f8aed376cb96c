//! Parser and printer for timed words such as `{a,b}@0.3 {b}@0.7`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use mtl_core::{Monotonicity, Point, Time, TimedWord};

use crate::error::{SourceSpan, SyntaxError, SyntaxErrorKind};
use crate::is_valid_prop;

/// Parses a timed word. A leading `#weak` directive allows repeated timestamps.
pub fn parse_timed_word(text: &str) -> Result<TimedWord, SyntaxError> {
    let mut s = Scanner { src: text, pos: 0 };
    let mut mode = Monotonicity::Strict;
    s.skip_trivia();
    if s.rest().starts_with("#weak") {
        s.pos += "#weak".len();
        mode = Monotonicity::Weak;
    }
    let mut points: Vec<Point> = Vec::new();
    loop {
        s.skip_trivia();
        if s.at_end() {
            break;
        }
        let start = s.pos;
        let event = s.event()?;
        let event_span = SourceSpan::new(start, s.pos);
        s.skip_ws_inline();
        s.expect_char('@')?;
        s.skip_ws_inline();
        let (time, time_span) = s.time()?;
        if event.is_empty() {
            return Err(SyntaxError::new(SyntaxErrorKind::EmptyEvent, event_span, "empty event set"));
        }
        if time.is_negative() {
            return Err(SyntaxError::new(SyntaxErrorKind::NegativeTime, time_span, "negative timestamp"));
        }
        if let Some(prev) = points.last() {
            let ok = match mode {
                Monotonicity::Strict => time > prev.time,
                Monotonicity::Weak => time >= prev.time,
            };
            if !ok {
                let msg = match mode {
                    Monotonicity::Strict => "timestamps must strictly increase (use `#weak` to allow repeats)",
                    Monotonicity::Weak => "timestamps must not decrease",
                };
                return Err(SyntaxError::new(SyntaxErrorKind::NonMonotone, time_span, msg));
            }
        }
        points.push(Point { event, time });
    }
    TimedWord::new(points, mode)
        .map_err(|e| SyntaxError::new(SyntaxErrorKind::Syntax, SourceSpan::point(text.len()), e.to_string()))
}

/// Parses a single timestamp such as `3`, `0.25` or `1/10`.
pub fn parse_time(text: &str) -> Result<Time, SyntaxError> {
    let mut s = Scanner { src: text.trim(), pos: 0 };
    let (time, _) = s.time()?;
    if !s.at_end() {
        return Err(s.error_here(SyntaxErrorKind::Syntax, format!("unexpected {} after timestamp", s.found())));
    }
    Ok(time)
}

/// Prints a word in the format accepted by [`parse_timed_word`].
pub fn print_timed_word(w: &TimedWord) -> String {
    w.to_string()
}

struct Scanner<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws_inline(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn skip_trivia(&mut self) {
        loop {
            self.skip_ws_inline();
            if self.rest().starts_with("//") {
                match self.rest().find('\n') {
                    Some(k) => self.pos += k,
                    None => self.pos = self.src.len(),
                }
            } else {
                break;
            }
        }
    }

    fn error_here(&self, kind: SyntaxErrorKind, msg: impl Into<String>) -> SyntaxError {
        let end = self.pos + self.peek().map(char::len_utf8).unwrap_or(0);
        SyntaxError::new(kind, SourceSpan::new(self.pos, end), msg)
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(c) => format!("`{}`", c.escape_default()),
            None => "end of input".to_string(),
        }
    }

    fn expect_char(&mut self, ch: char) -> Result<(), SyntaxError> {
        if self.peek() == Some(ch) {
            self.pos += ch.len_utf8();
            Ok(())
        } else {
            Err(self.error_here(SyntaxErrorKind::Syntax, format!("expected `{ch}`, found {}", self.found())))
        }
    }

    fn event(&mut self) -> Result<BTreeSet<String>, SyntaxError> {
        self.expect_char('{')?;
        let mut props = BTreeSet::new();
        self.skip_ws_inline();
        if self.peek() == Some('}') {
            self.pos += 1;
            return Ok(props);
        }
        loop {
            self.skip_ws_inline();
            let start = self.pos;
            while let Some(c) = self.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    self.pos += 1;
                } else {
                    break;
                }
            }
            let name = &self.src[start..self.pos];
            if name.is_empty() {
                return Err(self.error_here(
                    SyntaxErrorKind::Syntax,
                    format!("expected a proposition name, found {}", self.found()),
                ));
            }
            if !is_valid_prop(name) {
                return Err(SyntaxError::new(
                    SyntaxErrorKind::Lexical,
                    SourceSpan::new(start, self.pos),
                    format!("`{name}` is not a valid proposition name"),
                ));
            }
            props.insert(name.to_string());
            self.skip_ws_inline();
            match self.peek() {
                Some(',') => self.pos += 1,
                Some('}') => {
                    self.pos += 1;
                    return Ok(props);
                }
                _ => {
                    return Err(self.error_here(
                        SyntaxErrorKind::Syntax,
                        format!("expected `,` or `}}`, found {}", self.found()),
                    ))
                }
            }
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    /// `-?digits(.digits)?` or `-?digits/digits`, parsed exactly.
    fn time(&mut self) -> Result<(Time, SourceSpan), SyntaxError> {
        let start = self.pos;
        let negative = self.peek() == Some('-');
        if negative {
            self.pos += 1;
        }
        let int_part = self.digits();
        if int_part.is_empty() {
            return Err(self.error_here(SyntaxErrorKind::Syntax, format!("expected a timestamp, found {}", self.found())));
        }
        let int: BigInt = int_part.parse().expect("digits parse as an integer");
        let mut value = BigRational::from_integer(int);
        match self.peek() {
            Some('.') => {
                self.pos += 1;
                let frac = self.digits();
                if frac.is_empty() {
                    return Err(self.error_here(SyntaxErrorKind::Syntax, "expected digits after `.`"));
                }
                let numer: BigInt = frac.parse().expect("digits parse as an integer");
                let denom = BigInt::from(10).pow(frac.len() as u32);
                value += BigRational::new(numer, denom);
            }
            Some('/') => {
                self.pos += 1;
                let den_text = self.digits();
                if den_text.is_empty() {
                    return Err(self.error_here(SyntaxErrorKind::Syntax, "expected a denominator after `/`"));
                }
                let den: BigInt = den_text.parse().expect("digits parse as an integer");
                if den.is_zero() {
                    return Err(SyntaxError::new(
                        SyntaxErrorKind::Syntax,
                        SourceSpan::new(start, self.pos),
                        "zero denominator",
                    ));
                }
                value = BigRational::new(value.to_integer(), den);
            }
            _ => {}
        }
        if negative {
            value = -value;
        }
        match self.peek() {
            Some(c) if !c.is_whitespace() && !self.rest().starts_with("//") => Err(self.error_here(
                SyntaxErrorKind::Syntax,
                format!("unexpected {} after timestamp", self.found()),
            )),
            _ => Ok((value, SourceSpan::new(start, self.pos))),
        }
    }
}
