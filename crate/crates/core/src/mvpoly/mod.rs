//! Exact sparse multivariate polynomials over the integers.
//!
//! Every polynomial lives in a [`VariableUniverse`], a fixed ordered list of
//! variable names. Coefficients are arbitrary-precision integers; rational
//! inputs enter through [`RatPoly`] and are carried as an integer numerator
//! over a positive denominator.

mod display;
mod monomial;
mod poly;
mod rational;
mod universe;

use thiserror::Error;

pub use monomial::Monomial;
pub use poly::{arith, ArithOp, MultiPoly};
pub use rational::RatPoly;
pub use universe::{Var, VarSet, VariableUniverse, MAX_VARS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials belong to different variable universes")]
    UniverseMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}` in universe")]
    DuplicateVariable(String),
    #[error("universe has {0} variables, at most {MAX_VARS} are supported")]
    TooManyVariables(usize),
    #[error("degree of the zero polynomial is undefined")]
    ZeroDegree,
    #[error("target degree {target} is below the polynomial degree {actual}")]
    DegreeTooSmall { target: u32, actual: u32 },
    #[error("homogenizing variable `{0}` already occurs in the polynomial")]
    HomogenizingVariableOccurs(String),
    #[error("division is not exact")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent overflow")]
    ExponentOverflow,
}
