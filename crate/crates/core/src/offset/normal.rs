//! Associated normal vectors and normal-hodographs.

use super::param::{Parametrization, ProjectiveParametrization};
use super::OffsetError;
use crate::eliminate::gcd_all;
use crate::mvpoly::{MultiPoly, Var};

pub type Vec3 = [MultiPoly; 3];

/// Normal data of a parametrization: the gcd-reduced affine normal `n` with
/// hodograph `h = n·n`, and their homogeneous counterparts `N`, `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalData {
    pub n: Vec3,
    pub big_n: Vec3,
    pub h: MultiPoly,
    pub big_h: MultiPoly,
}

/// Right-handed cross product.
pub fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [&a[1] * &b[2] - &a[2] * &b[1], &a[2] * &b[0] - &a[0] * &b[2], &a[0] * &b[1] - &a[1] * &b[0]]
}

pub fn dot(a: &Vec3, b: &Vec3) -> MultiPoly {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

/// Numerators of the partial derivatives of `(F1/F0, F2/F0, F3/F0)` with
/// respect to `v`: `F_{j,v} F0 - F_j F_{0,v}`.
pub fn tangent_numerators(f0: &MultiPoly, f: [&MultiPoly; 3], v: Var) -> Result<Vec3, OffsetError> {
    let d0 = f0.partial_derivative(v)?;
    let mut out = Vec::with_capacity(3);
    for fj in f {
        out.push(&fj.partial_derivative(v)? * f0 - fj * &d0);
    }
    Ok(out.try_into().expect("three components"))
}

/// Divides out the gcd of the components and fixes the sign so the first
/// nonzero component has a positive leading coefficient. `None` when the
/// vector vanishes identically.
pub fn reduce_vector(v: Vec3) -> Result<Option<Vec3>, OffsetError> {
    if v.iter().all(MultiPoly::is_zero) {
        return Ok(None);
    }
    let g = gcd_all(v.iter())?;
    let first = v.iter().find(|c| !c.is_zero()).expect("nonzero vector");
    let negative = !first.has_positive_leading_coefficient();
    let g = if negative { -g } else { g };
    let mut out = Vec::with_capacity(3);
    for c in v {
        out.push(if g.is_one() { c } else { c.div_exact(&g)? });
    }
    Ok(Some(out.try_into().expect("three components")))
}

/// Gcd-reduced affine normal of `P`; `None` for a degenerate map.
pub fn affine_normal(p: &Parametrization) -> Result<Option<Vec3>, OffsetError> {
    let [p1, p2, p3] = p.numerators();
    let a = tangent_numerators(p.p0(), [p1, p2, p3], Var::T1)?;
    let b = tangent_numerators(p.p0(), [p1, p2, p3], Var::T2)?;
    reduce_vector(cross(&a, &b))
}

pub fn associated_normal(p: &Parametrization, ph: &ProjectiveParametrization) -> Result<NormalData, OffsetError> {
    let n = affine_normal(p)?.ok_or(OffsetError::DegenerateNormal)?;
    let a = tangent_numerators(&ph.w, ph.spatial(), Var::T1)?;
    let b = tangent_numerators(&ph.w, ph.spatial(), Var::T2)?;
    let big_n = reduce_vector(cross(&a, &b))?.ok_or(OffsetError::DegenerateNormal)?;
    let h = dot(&n, &n);
    let big_h = dot(&big_n, &big_n);
    Ok(NormalData { n, big_n, h, big_h })
}
