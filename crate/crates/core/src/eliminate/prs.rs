//! Pseudo-remainders and the subresultant remainder sequence over
//! `Z[other variables][x]`.

use super::gcd::exact;
use super::ElimError;
use crate::mvpoly::{MultiPoly, Var};

fn trim(c: &mut Vec<MultiPoly>) {
    while c.len() > 1 && c.last().is_some_and(|p| p.is_zero()) {
        c.pop();
    }
}

/// `lc(g)^(deg f - deg g + 1) * f mod g`, with `g` of positive degree in `x`.
pub(crate) fn prem(f: &MultiPoly, g: &MultiPoly, x: Var) -> MultiPoly {
    let u = f.universe();
    let df = f.degree_in(x) as usize;
    let dg = g.degree_in(x) as usize;
    if f.is_zero() || df < dg {
        return f.clone();
    }
    let gc = g.coefficients_in(x);
    let lcg = &gc[dg];
    let mut r = f.coefficients_in(x);
    let mut pending = df - dg + 1;
    while r.len() > dg && !(r.len() == 1 && r[0].is_zero()) {
        let deg = r.len() - 1;
        let lr = r[deg].clone();
        let shift = deg - dg;
        if !lcg.is_one() {
            for c in r.iter_mut().take(deg) {
                if !c.is_zero() {
                    *c = &*c * lcg;
                }
            }
        }
        for j in 0..dg {
            if !gc[j].is_zero() {
                r[shift + j] = &r[shift + j] - &(&lr * &gc[j]);
            }
        }
        r.pop();
        pending -= 1;
        if r.is_empty() {
            r.push(MultiPoly::zero(u));
        }
        trim(&mut r);
        if r.len() == 1 && r[0].is_zero() {
            break;
        }
    }
    let rem = MultiPoly::from_coefficients(u, x, &r);
    if pending > 0 && !rem.is_zero() && !lcg.is_one() {
        rem * lcg.pow(pending as u32)
    } else {
        rem
    }
}

/// `h^(1 - delta) * g^delta`, which is exact in the subresultant recurrences.
fn next_h(h: &MultiPoly, g: &MultiPoly, delta: u32) -> Result<MultiPoly, ElimError> {
    match delta {
        0 => Ok(h.clone()),
        1 => Ok(g.clone()),
        _ => exact(&g.pow(delta), &h.pow(delta - 1), "subresultant h update"),
    }
}

/// Last nonzero element of the subresultant sequence of `f`, `g`
/// (`deg_x f >= deg_x g`, `g != 0`); it is an associate of `gcd(f, g)` times
/// a factor free of `x`.
pub(crate) fn subresultant_last(mut f: MultiPoly, mut g: MultiPoly, x: Var) -> Result<MultiPoly, ElimError> {
    let u = f.universe().clone();
    let mut lead = MultiPoly::one(&u);
    let mut h = MultiPoly::one(&u);
    loop {
        if g.degree_in(x) == 0 {
            return Ok(g);
        }
        let delta = f.degree_in(x) - g.degree_in(x);
        let r = prem(&f, &g, x);
        if r.is_zero() {
            return Ok(g);
        }
        let divisor = &lead * &h.pow(delta);
        f = g;
        g = exact(&r, &divisor, "subresultant step")?;
        lead = f.leading_coefficient_in(x);
        h = next_h(&h, &lead, delta)?;
    }
}

/// Resultant by the subresultant algorithm. Both inputs nonzero with
/// positive degree in `x`.
pub(crate) fn resultant_prs(f: &MultiPoly, g: &MultiPoly, x: Var) -> Result<MultiPoly, ElimError> {
    let u = f.universe().clone();
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut negate = false;
    if a.degree_in(x) < b.degree_in(x) {
        if a.degree_in(x) % 2 == 1 && b.degree_in(x) % 2 == 1 {
            negate = true;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let mut lead = MultiPoly::one(&u);
    let mut h = MultiPoly::one(&u);
    loop {
        let (da, db) = (a.degree_in(x), b.degree_in(x));
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = prem(&a, &b, x);
        if r.is_zero() {
            return Ok(MultiPoly::zero(&u));
        }
        let divisor = &lead * &h.pow(delta);
        a = b;
        b = exact(&r, &divisor, "subresultant resultant step")?;
        lead = a.leading_coefficient_in(x);
        h = next_h(&h, &lead, delta)?;
        if b.degree_in(x) == 0 {
            break;
        }
    }
    let da = a.degree_in(x);
    // h <- b^da / h^(da - 1)
    let res = if da == 1 { b } else { exact(&b.pow(da), &h.pow(da - 1), "subresultant final step")? };
    Ok(if negate { -res } else { res })
}
