//! Multivariate gcds, contents with respect to variable subsets, and
//! univariate resultants of polynomials with polynomial coefficients.

mod gcd;
mod modular;
mod prs;
mod resultant;

use thiserror::Error;

use crate::mvpoly::PolyError;

pub use gcd::{content, content_and_primitive_part, gcd, gcd_all, primitive_part};
pub use resultant::{resultant, resultant_oracle, SylvesterMatrix, ORACLE_MAX_DIM};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ElimError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("both polynomials are constant in the elimination variable")]
    ConstantInVariable,
    #[error("Sylvester matrix of dimension {0} exceeds the oracle limit {ORACLE_MAX_DIM}")]
    OracleTooLarge(usize),
    #[error("internal consistency failure: inexact division in {0}")]
    InexactDivision(&'static str),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mvpoly::{MultiPoly, Var, VarSet, VariableUniverse};
    use crate::testutil::poly;
    use num_rational::BigRational;
    use proptest::prelude::*;

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&poly("t1^2 - t2^2"), &poly("t1 - t2")).unwrap(), poly("t1 - t2"));
        let inner = gcd(&poly("-6*t1^2*t2"), &poly("3*t1^2")).unwrap();
        assert_eq!(gcd(&poly("-6*t1^5"), &inner).unwrap(), poly("3*t1^2"));
        assert_eq!(gcd(&poly("0"), &poly("-2*t1 + 4")).unwrap(), poly("2*t1 - 4"));
        assert_eq!(gcd(&poly("0"), &poly("0")), Err(ElimError::BothZero));
        let g = poly("t1*k1 - t2^2 + 3");
        let a = &g * &poly("t1^3 + d*t2 - 1");
        let b = &g * &poly("(t2 + k2)^2");
        assert_eq!(gcd(&a, &b).unwrap(), g);
    }

    #[test]
    fn content_examples() {
        let c = content(&poly("c1*t1^2 + c2*t1^2*t2"), VarSet::of(&[Var::C1, Var::C2, Var::C3])).unwrap();
        assert_eq!(c, poly("t1^2"));
        let vars = VarSet::of(&[Var::D, Var::K1]);
        assert_eq!(content(&poly("d*t1 + k1*t2"), vars).unwrap(), poly("1"));
        assert_eq!(content(&poly("0"), vars), Err(ElimError::ZeroPolynomial));
        let (c, pp) = content_and_primitive_part(&poly("6*d*t1^2 - 4*k1*t1*t2"), vars).unwrap();
        assert_eq!((c, pp), (poly("2*t1"), poly("3*d*t1 - 2*k1*t2")));
    }

    #[test]
    fn resultant_examples() {
        let x = Var::T0;
        assert_eq!(resultant(&poly("t0 - k1"), &poly("t0 - k2"), x).unwrap(), poly("k1 - k2"));
        assert_eq!(resultant(&poly("t0^2 - t1"), &poly("t0 - t2"), x).unwrap(), poly("t2^2 - t1"));
        assert_eq!(resultant(&poly("t0^3 + t1"), &poly("t2 + 1"), x).unwrap(), poly("(t2 + 1)^3"));
        assert_eq!(resultant(&poly("2*t1"), &poly("t0^2 + 1"), x).unwrap(), poly("4*t1^2"));
        assert_eq!(resultant(&poly("t1"), &poly("t2"), x), Err(ElimError::ConstantInVariable));
        assert_eq!(resultant_oracle(&poly("t0 - 1"), &poly("t0 + 1"), x).unwrap(), poly("2"));
        assert_eq!(resultant_oracle(&poly("2*t0"), &poly("3"), x).unwrap(), poly("3"));
        let big = poly("t0^5 + 1");
        assert_eq!(resultant_oracle(&big, &big, x), Err(ElimError::OracleTooLarge(10)));
    }

    #[test]
    fn bareiss_path_matches_oracle() {
        // Both degrees at least 3, so the Bareiss branch is taken.
        let f = poly("k1*t0^3 + t1*t0^2 - t2*t0 + 2");
        let g = poly("t0^4 - k2*t0^3 + t0 + t1*t2");
        let x = Var::T0;
        assert_eq!(resultant(&f, &g, x).unwrap(), resultant_oracle(&f, &g, x).unwrap());
        assert_eq!(resultant(&f, &(&f * &poly("t0^2 + t1")), x).unwrap(), poly("0"));
    }

    #[test]
    fn sylvester_layout() {
        let m = SylvesterMatrix::new(&poly("t0^2 + 2*t0 + 3"), &poly("5*t0 + 7"), Var::T0).unwrap();
        assert_eq!(m.dim(), 3);
        let row = |i: usize| m.row(i).iter().map(|e| e.to_string()).collect::<Vec<_>>();
        assert_eq!(row(0), ["1", "2", "3"]);
        assert_eq!(row(1), ["5", "7", "0"]);
        assert_eq!(row(2), ["0", "5", "7"]);
    }

    fn small_poly(vars: &'static [Var], max_deg: u32, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
        let term = (proptest::collection::vec(0..=max_deg, vars.len()), -4i64..=4);
        proptest::collection::vec(term, 0..=max_terms).prop_map(move |ts| {
            let u = VariableUniverse::offset_default();
            let mut p = MultiPoly::zero(&u);
            for (exps, c) in ts {
                let mut m = MultiPoly::constant(&u, c);
                for (v, e) in vars.iter().zip(exps) {
                    m = m * MultiPoly::var(&u, *v).pow(e);
                }
                p = p + m;
            }
            p
        })
    }

    const TX: &[Var] = &[Var::T0, Var::T1, Var::T2];
    const CONTENT_VARS: &[Var] = &[Var::T1, Var::T2, Var::K1, Var::D];

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn resultant_agrees_with_oracle(f in small_poly(TX, 3, 4), g in small_poly(TX, 3, 4)) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            prop_assume!(f.degree_in(Var::T0) + g.degree_in(Var::T0) >= 1);
            let x = Var::T0;
            prop_assert_eq!(resultant(&f, &g, x).unwrap(), resultant_oracle(&f, &g, x).unwrap());
        }

        #[test]
        fn resultant_swap_sign(f in small_poly(TX, 3, 4), g in small_poly(TX, 3, 4)) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let x = Var::T0;
            let (df, dg) = (f.degree_in(x), g.degree_in(x));
            prop_assume!(df + dg >= 1);
            let fg = resultant(&f, &g, x).unwrap();
            let gf = resultant(&g, &f, x).unwrap();
            prop_assert_eq!(fg, if (df * dg) % 2 == 1 { -gf } else { gf });
        }

        #[test]
        fn common_factor_kills_resultant(
            a in small_poly(TX, 2, 3), b in small_poly(TX, 2, 3), k in 1i64..4, c in small_poly(&[Var::T1, Var::T2], 2, 3)
        ) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let u = VariableUniverse::offset_default();
            let factor = MultiPoly::var(&u, Var::T0) * MultiPoly::constant(&u, k) + c;
            let x = Var::T0;
            prop_assert!(resultant(&(&a * &factor), &(&b * &factor), x).unwrap().is_zero());
        }

        #[test]
        fn resultant_specializes(
            f in small_poly(TX, 3, 4), g in small_poly(TX, 3, 4), p in -3i64..=3, q in 1i64..=3, r in -3i64..=3
        ) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let x = Var::T0;
            prop_assume!(f.degree_in(x) + g.degree_in(x) >= 1);
            let bind = [(Var::T1, BigRational::new(p.into(), q.into())), (Var::T2, BigRational::from_integer(r.into()))];
            let (lf, _) = f.leading_coefficient_in(x).substitute(&bind).unwrap();
            let (lg, _) = g.leading_coefficient_in(x).substitute(&bind).unwrap();
            prop_assume!(!lf.is_zero() && !lg.is_zero());
            let (res_spec, den_r) = resultant(&f, &g, x).unwrap().substitute(&bind).unwrap();
            let (fs, den_f) = f.substitute(&bind).unwrap();
            let (gs, den_g) = g.substitute(&bind).unwrap();
            let spec_res = resultant(&fs, &gs, x).unwrap();
            // Res(f/a, g/b) = Res(f, g) / (a^deg g * b^deg f)
            let scale = num_traits::pow(den_f, g.degree_in(x) as usize) * num_traits::pow(den_g, f.degree_in(x) as usize);
            prop_assert_eq!(res_spec.scale(&scale), spec_res.scale(&den_r));
        }

        #[test]
        fn content_times_primitive_part(p in small_poly(CONTENT_VARS, 2, 5), mask in 1u8..15) {
            prop_assume!(!p.is_zero());
            let vars: VarSet = CONTENT_VARS.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, v)| *v).collect();
            let (c, pp) = content_and_primitive_part(&p, vars).unwrap();
            prop_assert_eq!(&c * &pp, p.clone());
            prop_assert!(content(&pp, vars).unwrap().is_one());
        }

        #[test]
        fn gcd_of_multiples(g in small_poly(TX, 2, 3), a in small_poly(TX, 2, 3), b in small_poly(TX, 2, 3)) {
            prop_assume!(!g.is_zero() && !a.is_zero() && !b.is_zero());
            let ga = &g * &a;
            let gb = &g * &b;
            let h = gcd(&ga, &gb).unwrap();
            prop_assert!(ga.try_div_exact(&h).is_some() && gb.try_div_exact(&h).is_some());
            prop_assert!(h.try_div_exact(&g).is_some());
            prop_assert!(h.has_positive_leading_coefficient());
            let cofactors = gcd(&ga.div_exact(&h).unwrap(), &gb.div_exact(&h).unwrap()).unwrap();
            prop_assert!(cofactors.is_one());
        }

        #[test]
        fn gcd_associative(a in small_poly(TX, 2, 3), b in small_poly(TX, 2, 3), c in small_poly(TX, 2, 3), s in small_poly(TX, 1, 2)) {
            prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero() && !s.is_zero());
            let (a, b, c) = (&a * &s, &b * &s, c);
            let left = gcd(&gcd(&a, &b).unwrap(), &c).unwrap();
            let right = gcd(&a, &gcd(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
