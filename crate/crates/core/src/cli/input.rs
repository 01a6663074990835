//! Surface description files.
//!
//! ```text
//! # hyperbolic paraboloid
//! label = hyperbolic paraboloid
//! P1 = t1
//! P2 = 2*t2
//! P3 = t1^2 - t2^2
//! P0 = 1          # optional, defaults to 1
//! m = 1           # optional tracing index
//! ```

use thiserror::Error;

use super::parser::{parse_polynomial, ParseError};
use crate::mvpoly::{MultiPoly, RatPoly, VariableUniverse};
use crate::offset::{surface_vars, RationalFunction};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InputError {
    #[error("line {line}: expected `key = value`")]
    MissingEquals { line: usize },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: duplicate key `{key}`")]
    DuplicateKey { line: usize, key: String },
    #[error("missing required key `{0}`")]
    MissingKey(&'static str),
    #[error("line {line}: tracing index must be a positive integer, got `{value}`")]
    BadTracingIndex { line: usize, value: String },
    #[error("{key}: {source}")]
    Expression {
        key: &'static str,
        #[source]
        source: ParseError,
    },
    #[error("P0 is the zero polynomial")]
    ZeroDenominator,
}

/// One surface: numerators `P1, P2, P3`, an optional common denominator
/// `P0`, an optional tracing index and an optional label.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SurfaceInput {
    pub p: [String; 3],
    pub p0: Option<String>,
    pub tracing_index: Option<u32>,
    pub label: Option<String>,
}

const KEYS: [&str; 6] = ["P1", "P2", "P3", "P0", "m", "label"];

impl SurfaceInput {
    pub fn polynomial(p1: &str, p2: &str, p3: &str) -> SurfaceInput {
        SurfaceInput { p: [p1.into(), p2.into(), p3.into()], ..SurfaceInput::default() }
    }

    /// Parses the `key = value` format. Everything after `#` is a comment.
    pub fn parse(text: &str) -> Result<SurfaceInput, InputError> {
        let mut seen: [Option<String>; 6] = Default::default();
        let mut m_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content.split_once('=').ok_or(InputError::MissingEquals { line })?;
            let key = key.trim();
            let slot = KEYS
                .iter()
                .position(|k| *k == key)
                .ok_or_else(|| InputError::UnknownKey { line, key: key.into() })?;
            if seen[slot].is_some() {
                return Err(InputError::DuplicateKey { line, key: key.into() });
            }
            if key == "m" {
                m_line = line;
            }
            seen[slot] = Some(value.trim().to_string());
        }
        let [p1, p2, p3, p0, m, label] = seen;
        let tracing_index = match m {
            None => None,
            Some(v) => match v.parse::<u32>() {
                Ok(m) if m > 0 => Some(m),
                _ => return Err(InputError::BadTracingIndex { line: m_line, value: v }),
            },
        };
        Ok(SurfaceInput {
            p: [
                p1.ok_or(InputError::MissingKey("P1"))?,
                p2.ok_or(InputError::MissingKey("P2"))?,
                p3.ok_or(InputError::MissingKey("P3"))?,
            ],
            p0,
            tracing_index,
            label: label.filter(|l| !l.is_empty()),
        })
    }

    /// Parses the expressions into `(P1/P0, P2/P0, P3/P0)`.
    pub fn rational_functions(&self) -> Result<[RationalFunction; 3], InputError> {
        let parse = |key: &'static str, text: &str| parse_expression(text).map_err(|source| InputError::Expression { key, source });
        let den = match &self.p0 {
            Some(text) => parse("P0", text)?,
            None => RatPoly::from_integer(MultiPoly::one(&VariableUniverse::offset_default())),
        };
        if den.is_zero() {
            return Err(InputError::ZeroDenominator);
        }
        let keys = ["P1", "P2", "P3"];
        let mut out = Vec::with_capacity(3);
        for (key, text) in keys.into_iter().zip(&self.p) {
            out.push(RationalFunction::from_ratpolys(&parse(key, text)?, &den));
        }
        Ok(out.try_into().expect("three components"))
    }
}

/// Parses a rational-coefficient polynomial in `t1, t2`.
pub fn parse_expression(text: &str) -> Result<RatPoly, ParseError> {
    parse_polynomial(text, &VariableUniverse::offset_default(), surface_vars())
}
