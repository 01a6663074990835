//! Word-size modular images of multivariate polynomials, used to bound gcd
//! degrees before running the exact algorithm.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::mvpoly::{MultiPoly, Var, MAX_VARS};

/// 2^61 - 1.
const PRIME: u64 = (1 << 61) - 1;

#[inline]
fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

#[inline]
fn add_mod(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= PRIME {
        s - PRIME
    } else {
        s
    }
}

#[inline]
fn sub_mod(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + PRIME - b
    }
}

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b);
        }
        b = mul_mod(b, b);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, PRIME - 2)
}

fn reduce(c: &BigInt) -> u64 {
    let p = BigInt::from(PRIME);
    c.mod_floor(&p).to_u64().expect("residue fits in u64")
}

/// Image of `p` in `F_p[x]` after evaluating every other variable at `point`.
fn univariate_image(p: &MultiPoly, x: Var, point: &[u64; MAX_VARS]) -> Vec<u64> {
    let mut out = vec![0u64; p.degree_in(x) as usize + 1];
    for (m, c) in p.terms() {
        let mut val = reduce(c);
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 && i != x.index() {
                val = mul_mod(val, pow_mod(point[i], e as u64));
            }
        }
        let slot = &mut out[m.exponent(x) as usize];
        *slot = add_mod(*slot, val);
    }
    out
}

fn trim(p: &mut Vec<u64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

/// Degree of the monic gcd in `F_p[x]`; `None` when both inputs vanish.
fn gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>) -> Option<usize> {
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        // a <- a mod b
        let inv = inv_mod(*b.last().unwrap());
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let q = mul_mod(*a.last().unwrap(), inv);
            for (j, &bj) in b.iter().enumerate() {
                a[shift + j] = sub_mod(a[shift + j], mul_mod(q, bj));
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    if a.is_empty() {
        None
    } else {
        Some(a.len() - 1)
    }
}

/// Upper bound on `deg_x gcd(a, b)` from a random evaluation of the other
/// variables modulo a large prime. Returns `None` when no evaluation point
/// kept both leading coefficients in `x` nonzero.
///
/// The bound is rigorous: the gcd's leading coefficient in `x` divides the
/// leading coefficients of both inputs, so it survives any point where those
/// do not vanish, and reduction modulo a prime can only enlarge a gcd.
pub(crate) fn gcd_degree_bound(a: &MultiPoly, b: &MultiPoly, x: Var, seed: u64) -> Option<u32> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (x.index() as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let da = a.degree_in(x) as usize;
    let db = b.degree_in(x) as usize;
    for _ in 0..4 {
        let mut point = [0u64; MAX_VARS];
        for slot in point.iter_mut() {
            *slot = rng.gen_range(1..PRIME);
        }
        let ia = univariate_image(a, x, &point);
        let ib = univariate_image(b, x, &point);
        if ia[da] == 0 || ib[db] == 0 {
            continue;
        }
        return gcd_degree(ia, ib).map(|d| d as u32);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::poly;

    #[test]
    fn detects_trivial_and_nontrivial_gcds() {
        let a = poly("(t1 - k1*t2)*(t1^2 + d)");
        let b = poly("(t1 - k1*t2)*(t1 + 3*t2)");
        assert_eq!(gcd_degree_bound(&a, &b, Var::T1, 1), Some(1));
        let c = poly("t1^2 + k2");
        assert_eq!(gcd_degree_bound(&a, &c, Var::T1, 1), Some(0));
    }

    #[test]
    fn modular_gcd_degree() {
        // (x-1)(x-2) and (x-1)(x+5)
        let a = vec![2, sub_mod(0, 3), 1];
        let b = vec![sub_mod(0, 5), 4, 1];
        assert_eq!(gcd_degree(a, b), Some(1));
        assert_eq!(gcd_degree(vec![], vec![]), None);
        assert_eq!(mul_mod(inv_mod(12345), 12345), 1);
    }
}
