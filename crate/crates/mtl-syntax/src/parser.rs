//! Recursive-descent parser for formulas.

use mtl_core::formula::{self as f, Formula};
use mtl_core::Interval;

use crate::error::{SyntaxError, SyntaxErrorKind};
use crate::lexer::{tokenize, Tok, Token};
use crate::KEYWORDS;

/// Parses a formula.
///
/// Grammar (binary operators right-associate; `U`, `S`, `Uw` are non-associative):
///
/// ```text
/// formula  := disj
/// disj     := conj ('|' conj)*
/// conj     := impl ('&' impl)*
/// impl     := temporal ('->' impl)?
/// temporal := unary (('U' | 'S' | 'Uw') interval? unary)?
/// unary    := '!' unary | ('F'|'P'|'G'|'H'|'Fw'|'Gw'|'O') interval? unary | atom
/// atom     := 'true' | 'false' | ident | '(' formula ')'
/// interval := ('[' | '(') nat ',' (nat | 'inf') (']' | ')')
/// ```
pub fn parse_formula(text: &str) -> Result<Formula, SyntaxError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0 };
    let out = p.formula()?;
    let t = p.peek();
    if t.tok != Tok::Eof {
        return Err(p.unexpected("end of input"));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

#[derive(Clone, Copy)]
enum Unary {
    F,
    P,
    G,
    H,
    Fw,
    Gw,
    O,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &str) -> SyntaxError {
        let t = self.peek();
        SyntaxError::new(
            SyntaxErrorKind::Syntax,
            t.span,
            format!("expected {expected}, found {}", t.tok.describe()),
        )
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<Token, SyntaxError> {
        if self.peek().tok == tok {
            Ok(self.bump())
        } else {
            Err(self.unexpected(what))
        }
    }

    fn formula(&mut self) -> Result<Formula, SyntaxError> {
        let mut items = vec![self.conj()?];
        while self.peek().tok == Tok::Bar {
            self.bump();
            items.push(self.conj()?);
        }
        Ok(fold_right(items, f::or))
    }

    fn conj(&mut self) -> Result<Formula, SyntaxError> {
        let mut items = vec![self.implication()?];
        while self.peek().tok == Tok::Amp {
            self.bump();
            items.push(self.implication()?);
        }
        Ok(fold_right(items, f::and))
    }

    fn implication(&mut self) -> Result<Formula, SyntaxError> {
        let lhs = self.temporal()?;
        if self.peek().tok == Tok::Arrow {
            self.bump();
            let rhs = self.implication()?;
            return Ok(f::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn temporal(&mut self) -> Result<Formula, SyntaxError> {
        let lhs = self.unary()?;
        let op = match &self.peek().tok {
            Tok::Ident(s) if s == "U" || s == "S" || s == "Uw" => s.clone(),
            _ => return Ok(lhs),
        };
        let op_tok = self.bump();
        let interval = self.optional_interval()?;
        let rhs = self.unary()?;
        let out = match op.as_str() {
            "U" => f::until(interval.unwrap_or_else(Interval::full), lhs, rhs),
            "S" => f::since(interval.unwrap_or_else(Interval::full), lhs, rhs),
            _ => {
                if interval.is_some() {
                    return Err(SyntaxError::new(
                        SyntaxErrorKind::Syntax,
                        op_tok.span,
                        "weak until `Uw` takes no interval",
                    ));
                }
                f::weak_until(lhs, rhs)
            }
        };
        if let Tok::Ident(s) = &self.peek().tok {
            if s == "U" || s == "S" || s == "Uw" {
                return Err(SyntaxError::new(
                    SyntaxErrorKind::Syntax,
                    self.peek().span,
                    "`U`, `S` and `Uw` are non-associative; add parentheses",
                ));
            }
        }
        Ok(out)
    }

    fn unary(&mut self) -> Result<Formula, SyntaxError> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Bang => {
                self.bump();
                Ok(f::not(self.unary()?))
            }
            Tok::Ident(s) => {
                let op = match s.as_str() {
                    "F" => Some(Unary::F),
                    "P" => Some(Unary::P),
                    "G" => Some(Unary::G),
                    "H" => Some(Unary::H),
                    "Fw" => Some(Unary::Fw),
                    "Gw" => Some(Unary::Gw),
                    "O" => Some(Unary::O),
                    _ => None,
                };
                match op {
                    Some(op) => {
                        self.bump();
                        let interval = self.optional_interval()?;
                        if matches!(op, Unary::O) && interval.is_some() {
                            return Err(SyntaxError::new(
                                SyntaxErrorKind::Syntax,
                                t.span,
                                "next `O` takes no interval",
                            ));
                        }
                        let i = interval.unwrap_or_else(Interval::full);
                        let body = self.unary()?;
                        Ok(match op {
                            Unary::F => f::eventually(i, body),
                            Unary::P => f::past_eventually(i, body),
                            Unary::G => f::always(i, body),
                            Unary::H => f::historically(i, body),
                            Unary::Fw => f::weak_eventually(i, body),
                            Unary::Gw => f::weak_always(i, body),
                            Unary::O => f::next(body),
                        })
                    }
                    None => self.atom(),
                }
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula, SyntaxError> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Ident(s) if s == "true" => {
                self.bump();
                Ok(Formula::True)
            }
            Tok::Ident(s) if s == "false" => {
                self.bump();
                Ok(Formula::False)
            }
            Tok::Ident(s) if KEYWORDS.contains(&s.as_str()) => Err(SyntaxError::new(
                SyntaxErrorKind::Syntax,
                t.span,
                format!("keyword `{s}` cannot be used as a proposition"),
            )),
            Tok::Ident(s) => {
                self.bump();
                Ok(f::atom(s.clone()))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.formula()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(self.unexpected("a formula")),
        }
    }

    /// An interval follows when the next token is `[`, or `(` directly followed by a number.
    fn optional_interval(&mut self) -> Result<Option<Interval>, SyntaxError> {
        let starts = match self.peek().tok {
            Tok::LBrack => true,
            Tok::LParen => matches!(self.peek_at(1), Tok::Nat(_)),
            _ => false,
        };
        if !starts {
            return Ok(None);
        }
        let open = self.bump();
        let left_closed = open.tok == Tok::LBrack;
        let lower = match self.bump() {
            Token { tok: Tok::Nat(n), .. } => n,
            other => {
                return Err(SyntaxError::new(
                    SyntaxErrorKind::MalformedInterval,
                    other.span,
                    format!("expected interval lower bound, found {}", other.tok.describe()),
                ))
            }
        };
        self.expect(Tok::Comma, "`,` in interval").map_err(malformed)?;
        let upper_tok = self.bump();
        let upper = match &upper_tok.tok {
            Tok::Nat(n) => Some(*n),
            Tok::Ident(s) if s == "inf" => None,
            other => {
                return Err(SyntaxError::new(
                    SyntaxErrorKind::MalformedInterval,
                    upper_tok.span,
                    format!("expected interval upper bound, found {}", other.describe()),
                ))
            }
        };
        let close = self.bump();
        let right_closed = match close.tok {
            Tok::RBrack => true,
            Tok::RParen => false,
            ref other => {
                return Err(SyntaxError::new(
                    SyntaxErrorKind::MalformedInterval,
                    close.span,
                    format!("expected `]` or `)` closing the interval, found {}", other.describe()),
                ))
            }
        };
        let span = open.span.join(close.span);
        Interval::new(lower, upper, left_closed, right_closed)
            .map(Some)
            .map_err(|e| SyntaxError::new(SyntaxErrorKind::MalformedInterval, span, e.to_string()))
    }
}

fn malformed(mut e: SyntaxError) -> SyntaxError {
    e.kind = SyntaxErrorKind::MalformedInterval;
    e
}

fn fold_right(mut items: Vec<Formula>, op: fn(Formula, Formula) -> Formula) -> Formula {
    let last = items.pop().expect("at least one operand");
    items.into_iter().rev().fold(last, |acc, x| op(x, acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::SourceSpan;
    use mtl_core::formula::*;

    #[test]
    fn nested_since_example() {
        let got = parse_formula("a U[0,3] (c S (P[0,1] d))").unwrap();
        let want = until(
            Interval::closed(0, 3),
            atom("a"),
            since(Interval::full(), atom("c"), past_eventually(Interval::closed(0, 1), atom("d"))),
        );
        assert_eq!(got, want);
    }

    #[test]
    fn separation_formula() {
        let got = parse_formula("F(0,1) (a & !F[1,1] (a | b))").unwrap();
        let want = eventually(
            Interval::open(0, 1),
            and(atom("a"), not(eventually(Interval::point(1), or(atom("a"), atom("b"))))),
        );
        assert_eq!(got, want);
    }

    #[test]
    fn empty_interval_is_reported_with_span() {
        let e = parse_formula("a U[3,2] b").unwrap_err();
        assert_eq!(e.kind, SyntaxErrorKind::MalformedInterval);
        assert_eq!(e.span, SourceSpan::new(3, 8));
        assert_eq!(parse_formula("F[1,inf] a").unwrap_err().kind, SyntaxErrorKind::MalformedInterval);
        assert_eq!(parse_formula("F[2,2) a").unwrap_err().kind, SyntaxErrorKind::MalformedInterval);
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse_formula("a | b & c -> d").unwrap(),
            or(atom("a"), and(atom("b"), implies(atom("c"), atom("d"))))
        );
        assert_eq!(parse_formula("a -> b -> c").unwrap(), implies(atom("a"), implies(atom("b"), atom("c"))));
        assert_eq!(parse_formula("a | b | c").unwrap(), or(atom("a"), or(atom("b"), atom("c"))));
        assert!(parse_formula("a U b U c").is_err());
        assert_eq!(parse_formula("!a U b").unwrap(), until(Interval::full(), not(atom("a")), atom("b")));
        assert_eq!(parse_formula("F (a)").unwrap(), eventually(Interval::full(), atom("a")));
        assert_eq!(parse_formula("a Uw b").unwrap(), weak_until(atom("a"), atom("b")));
        assert!(parse_formula("a Uw[0,1] b").is_err());
    }

    #[test]
    fn comments_and_keywords() {
        assert_eq!(parse_formula("// header\n a // trailing").unwrap(), atom("a"));
        assert!(parse_formula("U").is_err());
        assert!(parse_formula("a $ b").is_err());
        assert!(parse_formula("").is_err());
        assert!(parse_formula("(a").is_err());
    }
}
