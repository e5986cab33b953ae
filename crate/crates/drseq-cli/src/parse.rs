//! Tokenizer and recursive-descent parser for field elements, skew
//! polynomials, sequence literals, and initial-condition lists.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! expr   := ('+'|'-')* term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := atom ('^' '-'? integer)*
//! atom   := integer | 'z' | 'Y' | '(' expr ')'
//! ```
//!
//! Everything is evaluated as a skew polynomial over the active field, so a
//! coefficient written left of `Y` is carried across by the commutation rule
//! automatically (`z*Y` comes out as `Y*z + 1`). Field-element entry points
//! then insist on degree 0. Division and negative powers require a scalar
//! (degree-0) divisor; dividing by an operator is reported at the offending
//! position.

use drseq::{FieldElem, FieldTag, OrePoly, Rational, Seq};
use num::BigInt;
use std::fmt;

/// A parse failure, pointing at the byte offset of the offending token.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for SyntaxError {}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, SyntaxError> {
    Err(SyntaxError {
        position,
        message: message.into(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Z,
    Y,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, SyntaxError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                let n: BigInt = digits.parse().expect("digit run parses");
                toks.push((start, Tok::Int(n)));
            }
            'z' => {
                toks.push((i, Tok::Z));
                i += 1;
            }
            'Y' => {
                toks.push((i, Tok::Y));
                i += 1;
            }
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '/' => {
                toks.push((i, Tok::Slash));
                i += 1;
            }
            '^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            other => return err(i, format!("unexpected character '{other}'")),
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    tag: FieldTag,
    allow_y: bool,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, want: Tok, what: &str) -> Result<(), SyntaxError> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            err(self.here(), format!("expected {what}"))
        }
    }

    fn expr(&mut self) -> Result<OrePoly, SyntaxError> {
        let mut negate = false;
        while let Some(t) = self.peek() {
            match t {
                Tok::Plus => {
                    self.pos += 1;
                }
                Tok::Minus => {
                    negate = !negate;
                    self.pos += 1;
                }
                _ => break,
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        while let Some(t) = self.peek() {
            let minus = match t {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.pos += 1;
            let rhs = self.term()?;
            acc = if minus {
                acc.sub(&rhs).expect("uniform tag")
            } else {
                acc.add(&rhs).expect("uniform tag")
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<OrePoly, SyntaxError> {
        let mut acc = self.factor()?;
        while let Some(t) = self.peek() {
            let divide = match t {
                Tok::Star => false,
                Tok::Slash => true,
                _ => break,
            };
            let op_pos = self.here();
            self.pos += 1;
            let rhs = self.factor()?;
            if divide {
                let u = self.scalar_of(&rhs, op_pos, "divide by an operator")?;
                let inv = match u.inv() {
                    Ok(v) => v,
                    Err(_) => return err(op_pos, "division by zero"),
                };
                acc = acc.scale_right(&inv).expect("uniform tag");
            } else {
                acc = acc.mul(&rhs).expect("uniform tag");
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<OrePoly, SyntaxError> {
        let mut base = self.atom()?;
        while self.peek() == Some(&Tok::Caret) {
            let caret_pos = self.here();
            self.pos += 1;
            let negative = if self.peek() == Some(&Tok::Minus) {
                self.pos += 1;
                true
            } else {
                false
            };
            let exp_pos = self.here();
            let n = match self.bump() {
                Some(Tok::Int(n)) => n,
                _ => return err(exp_pos, "expected an integer exponent"),
            };
            let n: usize = match n.try_into() {
                Ok(v) => v,
                Err(_) => return err(exp_pos, "exponent too large"),
            };
            base = if negative {
                let u = self.scalar_of(&base, caret_pos, "raise an operator to a negative power")?;
                match u.pow(-(n as i64)) {
                    Ok(v) => OrePoly::from_elem(v),
                    Err(_) => return err(caret_pos, "division by zero"),
                }
            } else {
                base.pow(n).expect("uniform tag")
            };
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<OrePoly, SyntaxError> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(OrePoly::from_elem(FieldElem::from_rational(
                Rational::from_integer(n),
                self.tag,
            ))),
            Some(Tok::Z) => {
                if self.tag == FieldTag::Q {
                    err(pos, "'z' is not an element of the field q")
                } else {
                    Ok(OrePoly::from_elem(FieldElem::var()))
                }
            }
            Some(Tok::Y) => {
                if self.allow_y {
                    Ok(OrePoly::gen(self.tag))
                } else {
                    err(pos, "'Y' is not allowed in a field element")
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.eat(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Some(_) => err(pos, "expected a value"),
            None => err(pos, "unexpected end of input"),
        }
    }

    fn scalar_of(
        &self,
        p: &OrePoly,
        pos: usize,
        action: &str,
    ) -> Result<FieldElem, SyntaxError> {
        match p.degree() {
            None => Ok(FieldElem::zero(self.tag)),
            Some(0) => Ok(p.coeff(0)),
            Some(_) => err(pos, format!("cannot {action}")),
        }
    }
}

fn parse_with(text: &str, tag: FieldTag, allow_y: bool) -> Result<OrePoly, SyntaxError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return err(0, "empty expression");
    }
    let mut parser = Parser {
        toks,
        pos: 0,
        end: text.len(),
        tag,
        allow_y,
    };
    let value = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return err(parser.here(), "unexpected trailing input");
    }
    Ok(value)
}

/// Parses a skew polynomial such as `"Y^2 - Y*(1/(z-1)) + 1/(z-1)^2"`.
pub fn parse_ore_expr(text: &str, tag: FieldTag) -> Result<OrePoly, SyntaxError> {
    parse_with(text, tag, true)
}

/// Parses a field element such as `"(z^2-1)/(z-1)"` or `"3/4"`.
pub fn parse_field_expr(text: &str, tag: FieldTag) -> Result<FieldElem, SyntaxError> {
    let p = parse_with(text, tag, false)?;
    match p.degree() {
        None => Ok(FieldElem::zero(tag)),
        Some(0) => Ok(p.coeff(0)),
        Some(_) => unreachable!("Y rejected while parsing a field element"),
    }
}

/// Splits on top-level commas only, respecting parenthesis depth.
fn split_top_level(text: &str) -> Vec<(usize, &str)> {
    let bytes = text.as_bytes();
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth = depth.saturating_sub(1),
            b',' if depth == 0 => {
                parts.push((start, &text[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push((start, &text[start..]));
    parts
}

/// Parses a comma-separated list of field elements, e.g. `"1,0"` or
/// `"1/(z-1), 2"`.
pub fn parse_inits(text: &str, tag: FieldTag) -> Result<Vec<FieldElem>, SyntaxError> {
    let mut out = Vec::new();
    for (offset, part) in split_top_level(text) {
        match parse_field_expr(part, tag) {
            Ok(v) => out.push(v),
            Err(e) => {
                return Err(SyntaxError {
                    position: offset + e.position,
                    message: e.message,
                })
            }
        }
    }
    Ok(out)
}

/// Parses a bracketed sequence literal, e.g. `"[1, 1/z, 0]"`.
pub fn parse_seq(text: &str, tag: FieldTag) -> Result<Seq, SyntaxError> {
    let trimmed = text.trim();
    let lead = text.len() - text.trim_start().len();
    if !trimmed.starts_with('[') {
        return err(lead, "expected '['");
    }
    if !trimmed.ends_with(']') {
        return err(lead + trimmed.len(), "expected ']'");
    }
    let inner = &trimmed[1..trimmed.len() - 1];
    if inner.trim().is_empty() {
        return Ok(Seq::zeros(tag, 0));
    }
    let terms = parse_inits(inner, tag).map_err(|e| SyntaxError {
        position: lead + 1 + e.position,
        message: e.message,
    })?;
    Ok(Seq::new(tag, terms).expect("uniform tag"))
}
