//! Helpers shared by unit tests.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cli::parser::parse_polynomial;
use crate::mvpoly::{MultiPoly, VariableUniverse};

/// Parses an integer-coefficient polynomial over the default universe.
pub fn poly(text: &str) -> MultiPoly {
    let u = VariableUniverse::offset_default();
    let r = parse_polynomial(text, &u, u.all()).unwrap_or_else(|e| panic!("bad test polynomial {text:?}: {e}"));
    assert!(r.denominator() == &BigInt::from(1), "test polynomial {text:?} has rational coefficients");
    r.into_parts().0
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
