//! Seeded random polynomials, rationals and parametrizations.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::mvpoly::{Monomial, MultiPoly, Var, VarSet, VariableUniverse};
use crate::offset::{normalize, OffsetError, Parametrization, RationalFunction};

/// Numerator in `[-bound, bound] \ {0}`, denominator in `[1, bound]`.
pub fn random_rational<R: Rng>(rng: &mut R, bound: u32) -> BigRational {
    let b = bound as i64;
    let mut num = rng.gen_range(1..=b);
    if rng.gen_bool(0.5) {
        num = -num;
    }
    BigRational::new(BigInt::from(num), BigInt::from(rng.gen_range(1..=b)))
}

/// Up to `terms` terms in `vars`, each of total degree at most `max_deg`, with
/// coefficients in `[-bound, bound]`.
pub fn random_poly<R: Rng>(
    rng: &mut R,
    u: &Arc<VariableUniverse>,
    vars: VarSet,
    max_deg: u32,
    terms: usize,
    bound: i64,
) -> MultiPoly {
    let vars: Vec<Var> = vars.iter().collect();
    let count = rng.gen_range(1..=terms);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let deg = rng.gen_range(0..=max_deg);
        let mut m = Monomial::ONE;
        for _ in 0..deg {
            let v = vars[rng.gen_range(0..vars.len())];
            m = m.mul(&Monomial::var(v, 1));
        }
        out.push((m, BigInt::from(rng.gen_range(-bound..=bound))));
    }
    MultiPoly::from_terms(u, out)
}

/// A random parametrization in `t1, t2` with component degrees at most
/// `max_deg` and coefficients in `[-bound, bound]`; half of the draws are
/// rational. Degenerate draws (constant maps) are retried.
pub fn random_parametrization<R: Rng>(rng: &mut R, max_deg: u32, bound: i64) -> Parametrization {
    let u = VariableUniverse::offset_default();
    let vars = VarSet::of(&[Var::T1, Var::T2]);
    loop {
        let den = if rng.gen_bool(0.5) { random_poly(rng, &u, vars, max_deg, 3, bound) } else { MultiPoly::one(&u) };
        let nums = [0, 1, 2].map(|_| random_poly(rng, &u, vars, max_deg, 4, bound));
        match normalize(&nums.map(|n| RationalFunction::new(n, den.clone()))) {
            Ok(p) => return p,
            Err(OffsetError::ZeroDenominator | OffsetError::ConstantMap) => continue,
            Err(e) => panic!("unexpected normalization failure: {e}"),
        }
    }
}
