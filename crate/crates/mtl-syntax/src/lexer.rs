//! Tokenizer for formula text.

use crate::error::{SourceSpan, SyntaxError, SyntaxErrorKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Nat(u64),
    LBrack,
    RBrack,
    LParen,
    RParen,
    Comma,
    Bar,
    Amp,
    Arrow,
    Bang,
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Nat(n) => format!("number `{n}`"),
            Tok::LBrack => "`[`".into(),
            Tok::RBrack => "`]`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Bar => "`|`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Bang => "`!`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub span: SourceSpan,
}

/// Splits `src` into tokens, skipping whitespace and `//` comments.
pub(crate) fn tokenize(src: &str) -> Result<Vec<Token>, SyntaxError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c == b'/' && bytes.get(i + 1) == Some(&b'/') {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
            continue;
        }
        let start = i;
        let single = |t: Tok| Token { tok: t, span: SourceSpan::new(start, start + 1) };
        match c {
            b'[' => out.push(single(Tok::LBrack)),
            b']' => out.push(single(Tok::RBrack)),
            b'(' => out.push(single(Tok::LParen)),
            b')' => out.push(single(Tok::RParen)),
            b',' => out.push(single(Tok::Comma)),
            b'|' => out.push(single(Tok::Bar)),
            b'&' => out.push(single(Tok::Amp)),
            b'!' => out.push(single(Tok::Bang)),
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                out.push(Token { tok: Tok::Arrow, span: SourceSpan::new(start, start + 2) });
                i += 2;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &src[start..i];
                let n: u64 = text.parse().map_err(|_| {
                    SyntaxError::new(
                        SyntaxErrorKind::Lexical,
                        SourceSpan::new(start, i),
                        format!("number `{text}` is too large"),
                    )
                })?;
                out.push(Token { tok: Tok::Nat(n), span: SourceSpan::new(start, i) });
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push(Token { tok: Tok::Ident(src[start..i].to_string()), span: SourceSpan::new(start, i) });
                continue;
            }
            _ => {
                let ch = src[start..].chars().next().unwrap_or('?');
                let end = start + ch.len_utf8();
                return Err(SyntaxError::new(
                    SyntaxErrorKind::Lexical,
                    SourceSpan::new(start, end),
                    format!("unexpected character `{}`", ch.escape_default()),
                ));
            }
        }
        i += 1;
    }
    out.push(Token { tok: Tok::Eof, span: SourceSpan::point(src.len()) });
    Ok(out)
}
