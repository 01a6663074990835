use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{reduce_fraction, MultiPoly};
use super::universe::VariableUniverse;
use super::PolyError;

/// Polynomial with rational coefficients, stored as an integer polynomial over
/// a positive common denominator in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    num: MultiPoly,
    den: BigInt,
}

impl RatPoly {
    pub fn new(num: MultiPoly, den: BigInt) -> Result<RatPoly, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let (num, den) = reduce_fraction(num, den);
        Ok(RatPoly { num, den })
    }

    pub fn from_integer(p: MultiPoly) -> RatPoly {
        RatPoly { num: p, den: BigInt::one() }
    }

    pub fn constant(universe: &Arc<VariableUniverse>, c: &BigRational) -> RatPoly {
        RatPoly::new(MultiPoly::constant(universe, c.numer().clone()), c.denom().clone())
            .expect("rational has nonzero denominator")
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn into_parts(self) -> (MultiPoly, BigInt) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        self.num.as_constant().map(|c| BigRational::new(c, self.den.clone()))
    }

    pub fn universe(&self) -> &Arc<VariableUniverse> {
        self.num.universe()
    }

    pub fn try_add(&self, other: &RatPoly) -> Result<RatPoly, PolyError> {
        let a = self.num.scale(&other.den);
        let b = other.num.scale(&self.den);
        RatPoly::new(a.try_add(&b)?, &self.den * &other.den)
    }

    pub fn try_sub(&self, other: &RatPoly) -> Result<RatPoly, PolyError> {
        let a = self.num.scale(&other.den);
        let b = other.num.scale(&self.den);
        RatPoly::new(a.try_sub(&b)?, &self.den * &other.den)
    }

    pub fn try_mul(&self, other: &RatPoly) -> Result<RatPoly, PolyError> {
        RatPoly::new(self.num.try_mul(&other.num)?, &self.den * &other.den)
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly { num: -&self.num, den: self.den.clone() }
    }

    pub fn div_constant(&self, c: &BigRational) -> Result<RatPoly, PolyError> {
        if c.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let mut num = self.num.scale(c.denom());
        let mut den = &self.den * c.numer();
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        RatPoly::new(num, den)
    }

    pub fn pow(&self, n: u32) -> RatPoly {
        RatPoly { num: self.num.pow(n), den: num_traits::pow(self.den.clone(), n as usize) }
    }
}
