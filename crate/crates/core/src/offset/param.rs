//! Affine rational parametrizations and their projectivization.

use std::fmt;
use std::sync::Arc;

use super::OffsetError;
use crate::eliminate::{gcd, gcd_all};
use crate::mvpoly::{MultiPoly, RatPoly, Var, VarSet, VariableUniverse};

/// A quotient of two polynomials in `t1, t2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    pub num: MultiPoly,
    pub den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> RationalFunction {
        RationalFunction { num, den }
    }

    pub fn polynomial(num: MultiPoly) -> RationalFunction {
        let den = MultiPoly::one(num.universe());
        RationalFunction { num, den }
    }

    /// `p / q` for rational-coefficient polynomials, with integer denominators cleared.
    pub fn from_ratpolys(p: &RatPoly, q: &RatPoly) -> RationalFunction {
        let num = p.numerator().scale(q.denominator());
        let den = q.numerator().scale(p.denominator());
        RationalFunction { num, den }
    }
}

/// Affine parametrization `(P1/P0, P2/P0, P3/P0)` in `t1, t2` with
/// `gcd(P0, ..., P3) = 1` and a positive leading coefficient on `P0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parametrization {
    p0: MultiPoly,
    p: [MultiPoly; 3],
}

impl Parametrization {
    pub fn p0(&self) -> &MultiPoly {
        &self.p0
    }

    /// `P1, P2, P3`.
    pub fn numerators(&self) -> &[MultiPoly; 3] {
        &self.p
    }

    pub fn universe(&self) -> &Arc<VariableUniverse> {
        self.p0.universe()
    }

    /// Scales every numerator, i.e. applies the homothety `x -> factor * x`.
    pub fn scaled(&self, factor: i64) -> Result<Parametrization, OffsetError> {
        let f = num_bigint::BigInt::from(factor);
        normalize(&[0, 1, 2].map(|i| RationalFunction::new(self.p[i].scale(&f), self.p0.clone())))
    }
}

impl fmt::Display for Parametrization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}) / ({})", self.p[0], self.p[1], self.p[2], self.p0)
    }
}

/// The surface variables `t1, t2`.
pub fn surface_vars() -> VarSet {
    VarSet::of(&[Var::T1, Var::T2])
}

/// Brings three rational functions to a common denominator and removes every
/// common factor.
pub fn normalize(raw: &[RationalFunction; 3]) -> Result<Parametrization, OffsetError> {
    let u = raw[0].num.universe().clone();
    for r in raw {
        if r.den.is_zero() {
            return Err(OffsetError::ZeroDenominator);
        }
        if !r.num.vars().union(r.den.vars()).difference(surface_vars()).is_empty() {
            return Err(OffsetError::NotSurfaceVariables);
        }
    }
    let mut p0 = MultiPoly::one(&u);
    for r in raw {
        let g = gcd(&p0, &r.den)?;
        p0 = p0 * r.den.try_div_exact(&g).ok_or(OffsetError::Internal("lcm of denominators".into()))?;
    }
    let mut p = [0, 1, 2].map(|i| {
        let cofactor = p0.try_div_exact(&raw[i].den).expect("lcm is a multiple of each denominator");
        &raw[i].num * &cofactor
    });
    let g = gcd_all([&p0, &p[0], &p[1], &p[2]])?;
    let flip = !p0.has_positive_leading_coefficient();
    let g = if flip { -g } else { g };
    if !g.is_one() {
        p0 = p0.div_exact(&g)?;
        for c in p.iter_mut() {
            *c = c.div_exact(&g)?;
        }
    }
    let lc0 = p0.leading_coefficient().expect("nonzero").clone();
    let constant = p.iter().all(|c| match c.leading_coefficient() {
        None => true,
        Some(lc) => c.scale(&lc0) == p0.scale(lc),
    });
    if constant {
        return Err(OffsetError::ConstantMap);
    }
    Ok(Parametrization { p0, p })
}

/// Homogeneous `(X, Y, Z, W)` of common degree `d_P` in `t0, t1, t2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveParametrization {
    pub x: MultiPoly,
    pub y: MultiPoly,
    pub z: MultiPoly,
    pub w: MultiPoly,
    pub d_p: u32,
}

impl ProjectiveParametrization {
    pub fn spatial(&self) -> [&MultiPoly; 3] {
        [&self.x, &self.y, &self.z]
    }
}

pub fn projective_vars() -> VarSet {
    VarSet::of(&[Var::T0, Var::T1, Var::T2])
}

pub fn projectivize(p: &Parametrization) -> Result<ProjectiveParametrization, OffsetError> {
    let all = [&p.p0, &p.p[0], &p.p[1], &p.p[2]];
    let d_p = all.iter().filter(|c| !c.is_zero()).map(|c| c.total_degree()).collect::<Result<Vec<_>, _>>()?;
    let d_p = d_p.into_iter().max().unwrap_or(0);
    let [w, x, y, z] = all.map(|c| c.homogenize(Var::T0, d_p));
    let (mut w, mut x, mut y, mut z) = (w?, x?, y?, z?);
    // A component of maximal degree is never divisible by t0, but keep the
    // invariant explicit.
    let shift = [&w, &x, &y, &z].iter().filter(|c| !c.is_zero()).map(|c| c.min_degree_in(Var::T0)).min().unwrap_or(0);
    if shift > 0 {
        let m = crate::mvpoly::Monomial::var(Var::T0, shift as u16);
        for c in [&mut w, &mut x, &mut y, &mut z] {
            *c = c.div_monomial(&m)?;
        }
    }
    Ok(ProjectiveParametrization { x, y, z, w, d_p: d_p - shift })
}
