use num_integer::Integer;

use super::modular::gcd_degree_bound;
use super::prs::subresultant_last;
use super::ElimError;
use crate::mvpoly::{MultiPoly, Var, VarSet};

const PROBE_SEED: u64 = 0x6f66_6673_6574;

/// Greatest common divisor, including the integer content, normalized to a
/// positive graded-lex leading coefficient.
pub fn gcd(p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly, ElimError> {
    if p.universe() != q.universe() {
        return Err(crate::mvpoly::PolyError::UniverseMismatch.into());
    }
    if p.is_zero() && q.is_zero() {
        return Err(ElimError::BothZero);
    }
    gcd_inner(p, q)
}

/// Gcd of a list of polynomials; zero entries are ignored.
pub fn gcd_all<'a, I>(polys: I) -> Result<MultiPoly, ElimError>
where
    I: IntoIterator<Item = &'a MultiPoly>,
{
    let mut list: Vec<&MultiPoly> = polys.into_iter().filter(|p| !p.is_zero()).collect();
    if list.is_empty() {
        return Err(ElimError::BothZero);
    }
    // Small operands first: the running gcd shrinks quickly.
    list.sort_by_key(|p| p.len());
    let mut g = list[0].clone().normalize_sign();
    for p in &list[1..] {
        if g.is_one() {
            break;
        }
        g = gcd_inner(&g, p)?;
    }
    Ok(g)
}

/// Content with respect to `vars`: the gcd of the coefficients of `p` viewed
/// as a polynomial in `vars` over the remaining variables.
pub fn content(p: &MultiPoly, vars: VarSet) -> Result<MultiPoly, ElimError> {
    if p.is_zero() {
        return Err(ElimError::ZeroPolynomial);
    }
    let groups = p.coefficients_wrt(vars);
    gcd_all(groups.iter().map(|(_, c)| c))
}

pub fn primitive_part(p: &MultiPoly, vars: VarSet) -> Result<MultiPoly, ElimError> {
    let c = content(p, vars)?;
    exact(p, &c, "primitive part")
}

/// `(content, primitive part)` with respect to `vars`.
pub fn content_and_primitive_part(p: &MultiPoly, vars: VarSet) -> Result<(MultiPoly, MultiPoly), ElimError> {
    let c = content(p, vars)?;
    let pp = exact(p, &c, "primitive part")?;
    Ok((c, pp))
}

pub(crate) fn exact(a: &MultiPoly, b: &MultiPoly, what: &'static str) -> Result<MultiPoly, ElimError> {
    a.try_div_exact(b).ok_or(ElimError::InexactDivision(what))
}

fn gcd_inner(a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly, ElimError> {
    if a.is_zero() {
        return Ok(b.clone().normalize_sign());
    }
    if b.is_zero() {
        return Ok(a.clone().normalize_sign());
    }
    let (ia, ib) = (a.integer_content(), b.integer_content());
    let int_gcd = ia.gcd(&ib);
    let (ma, mb) = (a.monomial_content(), b.monomial_content());
    let mono_gcd = ma.gcd(&mb);
    if a.is_monomial() || b.is_monomial() {
        return Ok(MultiPoly::monomial(a.universe(), mono_gcd, int_gcd));
    }
    let a1 = a.div_monomial(&ma)?.div_integer(&ia)?;
    let b1 = b.div_monomial(&mb)?.div_integer(&ib)?;
    let g = gcd_primitive(a1, b1)?;
    Ok(g.mul_term(&mono_gcd, &int_gcd).normalize_sign())
}

/// Gcd of two polynomials with unit integer content and no monomial factor.
/// The result is primitive with a positive leading coefficient.
fn gcd_primitive(a: MultiPoly, b: MultiPoly) -> Result<MultiPoly, ElimError> {
    let one = MultiPoly::one(a.universe());
    if a.is_constant() || b.is_constant() {
        return Ok(one);
    }
    let a = a.normalize_sign();
    let b = b.normalize_sign();
    if a == b {
        return Ok(a);
    }

    // A variable present in only one operand cannot occur in the gcd.
    let (va, vb) = (a.vars(), b.vars());
    if let Some(x) = va.difference(vb).iter().next() {
        return gcd_with_coefficients(&b, &a, x);
    }
    if let Some(x) = vb.difference(va).iter().next() {
        return gcd_with_coefficients(&a, &b, x);
    }

    let (small, large) = if a.len() <= b.len() { (&a, &b) } else { (&b, &a) };
    if large.try_div_exact(small).is_some() {
        return Ok(small.clone());
    }

    // Drop variables the gcd provably does not involve, and pick the cheapest
    // main variable among the rest.
    let mut main: Option<(Var, u32)> = None;
    for x in va.iter() {
        match gcd_degree_bound(&a, &b, x, PROBE_SEED) {
            Some(0) => {
                let mut coeffs = a.coefficients_in(x);
                coeffs.extend(b.coefficients_in(x));
                return gcd_all(coeffs.iter());
            }
            _ => {
                let cost = a.degree_in(x).min(b.degree_in(x));
                if main.map_or(true, |(_, c)| cost < c) {
                    main = Some((x, cost));
                }
            }
        }
    }
    let (x, _) = main.expect("nonconstant operands share a variable");
    gcd_prs(&a, &b, x)
}

/// gcd(b, a) where `x` occurs in `a` but not in `b`.
fn gcd_with_coefficients(b: &MultiPoly, a: &MultiPoly, x: Var) -> Result<MultiPoly, ElimError> {
    let mut coeffs = a.coefficients_in(x);
    coeffs.retain(|c| !c.is_zero());
    coeffs.sort_by_key(|c| c.len());
    let mut g = b.clone();
    for c in &coeffs {
        g = gcd_inner(&g, c)?;
        if g.is_one() {
            break;
        }
    }
    Ok(g)
}

/// Recursive gcd: contents in `x` handled recursively, primitive parts by the
/// subresultant remainder sequence.
fn gcd_prs(a: &MultiPoly, b: &MultiPoly, x: Var) -> Result<MultiPoly, ElimError> {
    let ca = gcd_all(a.coefficients_in(x).iter())?;
    let cb = gcd_all(b.coefficients_in(x).iter())?;
    let pa = exact(a, &ca, "content in main variable")?;
    let pb = exact(b, &cb, "content in main variable")?;
    let cont = gcd_inner(&ca, &cb)?;

    let (f, g) = if pa.degree_in(x) >= pb.degree_in(x) { (pa, pb) } else { (pb, pa) };
    let last = subresultant_last(f, g, x)?;
    let prim = if last.degree_in(x) == 0 {
        MultiPoly::one(a.universe())
    } else {
        let c = gcd_all(last.coefficients_in(x).iter())?;
        exact(&last, &c, "primitive part of last remainder")?.normalize_sign()
    };
    Ok((cont * prim).normalize_sign())
}
