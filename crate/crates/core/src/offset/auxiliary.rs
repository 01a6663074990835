//! Affine and projective auxiliary systems.

use std::sync::Arc;

use super::normal::{cross, dot, NormalData, Vec3};
use super::param::{projective_vars, Parametrization, ProjectiveParametrization};
use super::OffsetError;
use crate::eliminate::{gcd, gcd_all};
use crate::mvpoly::{MultiPoly, Var, VariableUniverse};

/// `(k1, k2, k3)`.
pub fn k_vector(u: &Arc<VariableUniverse>) -> Vec3 {
    [Var::K1, Var::K2, Var::K3].map(|v| MultiPoly::var(u, v))
}

/// `h·M_i^2 - d^2·w^2·G_i^2`.
fn offset_condition(h: &MultiPoly, w: &MultiPoly, m: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let d = MultiPoly::var(h.universe(), Var::D);
    h * &m.pow(2) - &(d * w).pow(2) * &g.pow(2)
}

/// `(s0, s1, s2, s3)`: `s0 = det(k; P; n)` and
/// `s_i = h·M_i^2 - d^2·P0^2·G_i^2` with `M = k × P`, `G = k × n`.
pub fn build_affine_auxiliary(p: &Parametrization, normal: &NormalData) -> [MultiPoly; 4] {
    let k = k_vector(p.universe());
    let pv: Vec3 = p.numerators().clone();
    let s0 = dot(&k, &cross(&pv, &normal.n));
    let m = cross(&k, &pv);
    let g = cross(&k, &normal.n);
    let [s1, s2, s3] = [0, 1, 2].map(|i| offset_condition(&normal.h, p.p0(), &m[i], &g[i]));
    [s0, s1, s2, s3]
}

/// The projective auxiliary system feeding the generalized resultant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxiliarySystem {
    /// `gcd(H, W^2)`.
    pub q: MultiPoly,
    /// Gcd of the components of `(X, Y, Z) × N`.
    pub q0: MultiPoly,
    /// `((X, Y, Z) × N) / Q0`.
    pub u: Vec3,
    /// `k1·U1 + k2·U2 + k3·U3`.
    pub t0: MultiPoly,
    /// `T_i = (H·M_{h,i}^2 - d^2·W^2·G_{h,i}^2) / Q`.
    pub t: Vec3,
    /// `k × (X, Y, Z)`.
    pub m_h: Vec3,
    /// `k × N`.
    pub g_h: Vec3,
}

/// Builds the system without checking the generalized-resultant hypotheses.
pub fn assemble_projective_auxiliary(
    ph: &ProjectiveParametrization,
    normal: &NormalData,
) -> Result<AuxiliarySystem, OffsetError> {
    let u = ph.w.universe();
    let k = k_vector(u);
    let xyz: Vec3 = [ph.x.clone(), ph.y.clone(), ph.z.clone()];
    let big_n = &normal.big_n;
    let raw = cross(&xyz, big_n);
    if raw.iter().all(MultiPoly::is_zero) {
        return Err(OffsetError::FormulaInapplicable(
            "position vector is parallel to the normal everywhere, so T0 vanishes identically".into(),
        ));
    }
    let q0 = gcd_all(raw.iter())?;
    let mut uvec = Vec::with_capacity(3);
    for r in &raw {
        uvec.push(r.div_exact(&q0)?);
    }
    let uvec: Vec3 = uvec.try_into().expect("three components");
    let t0 = dot(&k, &uvec);

    let q = gcd(&normal.big_h, &ph.w.pow(2))?;
    let m_h = cross(&k, &xyz);
    let g_h = cross(&k, big_n);
    let mut t = Vec::with_capacity(3);
    for i in 0..3 {
        let s = offset_condition(&normal.big_h, &ph.w, &m_h[i], &g_h[i]);
        t.push(s.try_div_exact(&q).ok_or(OffsetError::Internal(format!("Q does not divide S{}", i + 1)))?);
    }
    let t: Vec3 = t.try_into().expect("three components");
    Ok(AuxiliarySystem { q, q0, u: uvec, t0, t, m_h, g_h })
}

/// Checks the hypotheses of the generalized-resultant lemma on `T1, T2, T3`
/// and the existence of an index `i` with `t0` dividing neither `U_i` nor `T_i`.
pub fn check_hypotheses(a: &AuxiliarySystem) -> Result<(), OffsetError> {
    let tv = projective_vars();
    let mut problems = Vec::new();
    if let Some(i) = a.t.iter().position(MultiPoly::is_zero) {
        return Err(OffsetError::FormulaInapplicable(format!("T{} vanishes identically", i + 1)));
    }
    let free: Vec<String> =
        (0..3).filter(|&i| a.t[i].degree_in(Var::T0) == 0).map(|i| format!("T{}", i + 1)).collect();
    if !free.is_empty() {
        problems.push(format!("{} free of t0", free.join(", ")));
    }
    let degs = a.t.iter().map(|p| p.degree(tv)).collect::<Result<Vec<_>, _>>()?;
    if degs.iter().any(|&d| d != degs[0]) {
        problems.push(format!("T1, T2, T3 have different degrees in (t0, t1, t2): {degs:?}"));
    }
    let g = gcd_all(a.t.iter())?;
    if g.degree(tv)? > 0 {
        problems.push(format!("gcd(T1, T2, T3) = {g} is not constant in (t0, t1, t2)"));
    }
    let t0_free = |p: &MultiPoly| !p.is_zero() && p.min_degree_in(Var::T0) == 0;
    let witness = (0..3).any(|i| t0_free(&a.u[i]) && t0_free(&a.t[i]));
    if !witness {
        problems.push("t0 divides U_i or T_i for every i".into());
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(OffsetError::FormulaInapplicable(problems.join("; ")))
    }
}

pub fn build_projective_auxiliary(
    ph: &ProjectiveParametrization,
    normal: &NormalData,
) -> Result<AuxiliarySystem, OffsetError> {
    let a = assemble_projective_auxiliary(ph, normal)?;
    check_hypotheses(&a)?;
    Ok(a)
}
