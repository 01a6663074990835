//! Generalized resultant and the degree formula.

use std::collections::BTreeMap;

use serde::Serialize;

use super::auxiliary::AuxiliarySystem;
use super::param::surface_vars;
use super::{CheckOutcome, OffsetError};
use crate::eliminate::{content_and_primitive_part, resultant};
use crate::mvpoly::{MultiPoly, Var, VarSet};

pub fn c_vars() -> VarSet {
    VarSet::of(&[Var::C1, Var::C2, Var::C3])
}

pub fn dk_vars() -> VarSet {
    VarSet::of(&[Var::D, Var::K1, Var::K2, Var::K3])
}

/// `c1·T1 + c2·T2 + c3·T3`.
pub fn generic_combination(a: &AuxiliarySystem) -> MultiPoly {
    let u = a.t0.universe();
    let mut acc = MultiPoly::zero(u);
    for (v, t) in [Var::C1, Var::C2, Var::C3].into_iter().zip(&a.t) {
        acc = acc + MultiPoly::var(u, v) * t;
    }
    acc
}

/// `R = Res_{t0}(T0, c1·T1 + c2·T2 + c3·T3)`.
pub fn generalized_resultant(a: &AuxiliarySystem) -> Result<MultiPoly, OffsetError> {
    let t = generic_combination(a);
    let r = resultant(&a.t0, &t, Var::T0)?;
    if r.is_zero() {
        return Err(OffsetError::FormulaInapplicable("the generalized resultant vanishes identically".into()));
    }
    Ok(r)
}

/// `R = M1·M2·M3` with `M1 = Con_{d,k}(Con_c(R))`, `M2 = PP_{d,k}(Con_c(R))`
/// and `M3 = PP_c(R)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factors {
    pub m1: MultiPoly,
    pub m2: MultiPoly,
    pub m3: MultiPoly,
}

pub fn factor_resultant(r: &MultiPoly) -> Result<Factors, OffsetError> {
    let (con_c, m3) = content_and_primitive_part(r, c_vars())?;
    let (m1, m2) = content_and_primitive_part(&con_c, dk_vars())?;
    let f = Factors { m1, m2, m3 };
    verify_factorization(r, &f)?;
    Ok(f)
}

/// Exact-division check of `R = M1·M2·M3`, plus the shape of each factor.
pub fn verify_factorization(r: &MultiPoly, f: &Factors) -> Result<(), OffsetError> {
    let fail = |what: &str| Err(OffsetError::Internal(format!("factorization check failed: {what}")));
    let rest = match r.try_div_exact(&(&f.m1 * &f.m2)) {
        Some(q) => q,
        None => return fail("M1*M2 does not divide R"),
    };
    if rest != f.m3 {
        return fail("R / (M1*M2) differs from M3");
    }
    if !(f.m1.vars().intersection(dk_vars().union(c_vars())).is_empty()) {
        return fail("M1 involves d, k or c");
    }
    if !f.m2.vars().intersection(c_vars()).is_empty() {
        return fail("M2 involves c");
    }
    if [&f.m1, &f.m2, &f.m3].iter().any(|m| !m.is_homogeneous_in(surface_vars())) {
        return fail("a factor is not homogeneous in (t1, t2)");
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub m_delta: u32,
    pub delta: Option<u32>,
    pub deg_r: u32,
    pub deg_m1: u32,
    pub deg_m2: u32,
    pub deg_m3: u32,
    pub checks: Vec<CheckOutcome>,
    pub warnings: Vec<String>,
    pub timings_ms: BTreeMap<String, u64>,
}

pub fn report_from_factors(r: &MultiPoly, f: &Factors, m: Option<u32>) -> Result<DegreeReport, OffsetError> {
    let tv = surface_vars();
    let m_delta = f.m2.degree(tv)?;
    let delta = match m {
        None => None,
        Some(0) => return Err(OffsetError::TracingIndex { m: 0, m_delta }),
        Some(m) if m_delta % m != 0 => return Err(OffsetError::TracingIndex { m, m_delta }),
        Some(m) => Some(m_delta / m),
    };
    Ok(DegreeReport {
        m_delta,
        delta,
        deg_r: r.degree(tv)?,
        deg_m1: f.m1.degree(tv)?,
        deg_m2: m_delta,
        deg_m3: f.m3.degree(tv)?,
        checks: Vec::new(),
        warnings: Vec::new(),
        timings_ms: BTreeMap::new(),
    })
}

/// `m·δ = deg_{t1,t2}(PP_{d,k}(Con_c(R)))`, with `δ` when the tracing index is known.
pub fn extract_degree(r: &MultiPoly, m: Option<u32>) -> Result<DegreeReport, OffsetError> {
    if r.is_zero() {
        return Err(OffsetError::Elim(crate::eliminate::ElimError::ZeroPolynomial));
    }
    let f = factor_resultant(r)?;
    report_from_factors(r, &f, m)
}
