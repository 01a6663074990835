//! Preconditions of the degree formula that can be decided from `P` alone.

use super::normal::affine_normal;
use super::param::{projectivize, Parametrization};
use super::{CheckOutcome, OffsetError};
use crate::mvpoly::{MultiPoly, Var};

/// Runs the sphere, hodograph, cylinder and origin checks. A sphere centered
/// at the origin or a vanishing hodograph is an error; the rest only report.
pub fn check_assumptions(p: &Parametrization) -> Result<Vec<CheckOutcome>, OffsetError> {
    let mut out = Vec::new();

    let [p1, p2, p3] = p.numerators();
    let sum = p1.pow(2) + p2.pow(2) + p3.pow(2);
    let sphere = sum.try_div_exact(&p.p0().pow(2)).and_then(|q| q.as_constant());
    if let Some(c) = sphere {
        return Err(OffsetError::AssumptionViolation {
            check: "sphere".into(),
            detail: format!(
                "assumption \"not a sphere centered at the origin\" fails: P1^2 + P2^2 + P3^2 = {c}*P0^2, \
                 so every normal line passes through the center and the degree formula does not apply"
            ),
        });
    }
    out.push(CheckOutcome::pass("sphere", "not a sphere centered at the origin"));

    if affine_normal(p)?.is_none() {
        return Err(OffsetError::AssumptionViolation {
            check: "hodograph".into(),
            detail: "the tangent vectors are everywhere dependent, so the normal and the hodograph vanish".into(),
        });
    }
    out.push(CheckOutcome::pass("hodograph", "normal-hodograph is not identically zero"));

    let ph = projectivize(p)?;
    let moving = ph.spatial().iter().filter(|c| c.depends_on(Var::T0)).count();
    if !ph.w.depends_on(Var::T0) && moving == 1 {
        out.push(CheckOutcome::warn(
            "cylinder",
            "W is free of t0 and exactly one of X, Y, Z involves t0: the surface is a cylinder",
        ));
    } else {
        out.push(CheckOutcome::pass("cylinder", "no cylinder pattern in (X, Y, Z, W)"));
    }

    out.push(CheckOutcome::info(
        "origin",
        "the origin is assumed not to lie on the generic-distance offset; this is asserted, not verified",
    ));
    Ok(out)
}

/// Warnings about inputs with a known, commonly reproduced misprint.
pub fn known_input_warnings(p: &Parametrization) -> Vec<String> {
    let u = p.universe();
    let t1 = MultiPoly::var(u, Var::T1);
    let t2 = MultiPoly::var(u, Var::T2);
    let umbrella = [&t1 * &t2, t2.clone(), t1.pow(2)];
    let misprint = [&t1 * &t2, t2.clone(), t1.clone()];
    if !p.p0().is_one() {
        return Vec::new();
    }
    if p.numerators() == &umbrella {
        vec!["Whitney umbrella y1^2 - y2^2*y3 = 0: the widely printed parametrization (t1*t2, t2, t1) \
              is a typo and does not satisfy the implicit equation; this run uses the corrected \
              (t1*t2, t2, t1^2), which does"
            .into()]
    } else if p.numerators() == &misprint {
        vec!["(t1*t2, t2, t1) is the saddle y1 = y2*y3, not the Whitney umbrella y1^2 - y2^2*y3 = 0; \
              the umbrella is parametrized by (t1*t2, t2, t1^2)"
            .into()]
    } else {
        Vec::new()
    }
}
