//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' exponent)?
//! atom   := integer | identifier | '(' expr ')'
//! exponent := integer | '(' integer ')'
//! ```
//!
//! Division is only accepted by a nonzero constant, so `3/4*t1` and
//! `(t1 + t2)/2` are fine while `1/t2` is rejected. Juxtaposition (`2t1`) is a
//! syntax error.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::mvpoly::{MultiPoly, RatPoly, VarSet, VariableUniverse};

const MAX_EXPONENT: u32 = 1000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty expression")]
    Empty,
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("division by a non-constant expression at position {pos}")]
    DivisionByNonConstant { pos: usize },
    #[error("division by zero at position {pos}")]
    DivisionByZero { pos: usize },
    #[error("negative exponent at position {pos}")]
    NegativeExponent { pos: usize },
    #[error("exponent at position {pos} exceeds {MAX_EXPONENT}")]
    ExponentTooLarge { pos: usize },
    #[error("variable `{name}` at position {pos} is not allowed here")]
    UnknownVariable { name: String, pos: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("ascii digits");
                out.push((Tok::Int(n), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(ParseError::Syntax { pos: start, message: format!("unexpected character `{ch}`") });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    universe: &'a Arc<VariableUniverse>,
    allowed: VarSet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos: self.offset(), message: message.into() })
    }

    fn expr(&mut self) -> Result<RatPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.try_add(&self.term()?).expect("single universe");
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.try_sub(&self.term()?).expect("single universe");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.try_mul(&self.unary()?).expect("single universe");
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let at = self.offset();
                    let divisor = self.unary()?;
                    let c = divisor.as_constant().ok_or(ParseError::DivisionByNonConstant { pos: at })?;
                    if c.is_zero() {
                        return Err(ParseError::DivisionByZero { pos: at });
                    }
                    acc = acc.div_constant(&c).expect("nonzero divisor");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RatPoly, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        let parenthesized = self.peek() == Some(&Tok::LParen);
        if parenthesized {
            self.bump();
        }
        let e = match self.bump() {
            Some(Tok::Int(n)) => n,
            Some(Tok::Minus) => return Err(ParseError::NegativeExponent { pos: at }),
            _ => {
                self.pos -= 1;
                return self.syntax("expected a nonnegative integer exponent");
            }
        };
        if parenthesized && self.bump() != Some(Tok::RParen) {
            self.pos -= 1;
            return self.syntax("expected `)` after exponent");
        }
        let e: u32 = u32::try_from(&e).ok().filter(|&e| e <= MAX_EXPONENT).ok_or(ParseError::ExponentTooLarge { pos: at })?;
        if self.peek() == Some(&Tok::Caret) {
            return self.syntax("chained `^` is ambiguous, use parentheses");
        }
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<RatPoly, ParseError> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(RatPoly::from_integer(MultiPoly::constant(self.universe, n))),
            Some(Tok::Ident(name)) => {
                let v = self
                    .universe
                    .var(&name)
                    .ok()
                    .filter(|v| self.allowed.contains(*v))
                    .ok_or(ParseError::UnknownVariable { name, pos: at })?;
                Ok(RatPoly::from_integer(MultiPoly::var(self.universe, v)))
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                if self.bump() != Some(Tok::RParen) {
                    self.pos -= 1;
                    return self.syntax("expected `)`");
                }
                Ok(inner)
            }
            Some(_) => {
                self.pos -= 1;
                self.syntax("expected a number, variable or `(`")
            }
            None => self.syntax("unexpected end of input"),
        }
    }
}

/// Parses `text` into a rational-coefficient polynomial over `universe`,
/// accepting only variables in `allowed`.
pub fn parse_polynomial(text: &str, universe: &Arc<VariableUniverse>, allowed: VarSet) -> Result<RatPoly, ParseError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut p = Parser { toks, pos: 0, end: text.len(), universe, allowed };
    let out = p.expr()?;
    if p.pos < p.toks.len() {
        return p.syntax("unexpected trailing input");
    }
    Ok(out)
}
