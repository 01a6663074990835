use super::*;
use crate::mvpoly::Var;
use crate::testutil::poly;

fn surface(p1: &str, p2: &str, p3: &str, p0: &str) -> Parametrization {
    let den = poly(p0);
    normalize(&[p1, p2, p3].map(|s| RationalFunction::new(poly(s), den.clone()))).unwrap()
}

fn polynomial_surface(p1: &str, p2: &str, p3: &str) -> Parametrization {
    surface(p1, p2, p3, "1")
}

fn hyperbolic() -> Parametrization {
    polynomial_surface("t1", "2*t2", "t1^2 - t2^2")
}

fn circular() -> Parametrization {
    polynomial_surface("t1^3", "t2", "t1^6 + t2^2")
}

fn umbrella() -> Parametrization {
    polynomial_surface("t1*t2", "t2", "t1^2")
}

fn same_up_to_sign(a: &MultiPoly, b: &MultiPoly) -> bool {
    a == b || a == &-b
}

fn vec_up_to_sign(a: &Vec3, b: [&str; 3]) -> bool {
    let b = b.map(poly);
    a == &b || a == &b.clone().map(|c| -c)
}

#[test]
fn normalize_examples() {
    let p = hyperbolic();
    assert!(p.p0().is_one());
    assert_eq!(p.numerators(), &[poly("t1"), poly("2*t2"), poly("t1^2 - t2^2")]);

    let scaled = surface("2*t1", "2*t2", "2*(t1^2 + t2^2)", "2");
    assert_eq!(scaled, polynomial_surface("t1", "t2", "t1^2 + t2^2"));

    let raw = [
        RationalFunction::new(poly("t1"), poly("t2")),
        RationalFunction::new(poly("1"), poly("t2")),
        RationalFunction::polynomial(poly("t1")),
    ];
    let p = normalize(&raw).unwrap();
    assert_eq!(p.p0(), &poly("t2"));
    assert_eq!(p.numerators(), &[poly("t1"), poly("1"), poly("t1*t2")]);

    // A negative common denominator is moved to the numerators.
    let p = surface("t1", "t2", "1", "-t1^2 - 1");
    assert_eq!(p.p0(), &poly("t1^2 + 1"));
    assert_eq!(p.numerators(), &[poly("-t1"), poly("-t2"), poly("-1")]);
}

#[test]
fn normalize_errors() {
    let zero = RationalFunction::new(poly("t1"), poly("0"));
    let ok = RationalFunction::polynomial(poly("t2"));
    assert_eq!(normalize(&[zero, ok.clone(), ok.clone()]), Err(OffsetError::ZeroDenominator));
    let constant = [poly("3"), poly("0"), poly("-1")].map(RationalFunction::polynomial);
    assert_eq!(normalize(&constant), Err(OffsetError::ConstantMap));
    let scaled_constant = [poly("2*t1 + 2"), poly("t1 + 1"), poly("0")].map(|p| RationalFunction::new(p, poly("t1 + 1")));
    assert_eq!(normalize(&scaled_constant), Err(OffsetError::ConstantMap));
    let foreign = [poly("t1"), poly("t2"), poly("d")].map(RationalFunction::polynomial);
    assert_eq!(normalize(&foreign), Err(OffsetError::NotSurfaceVariables));
}

#[test]
fn projectivize_examples() {
    let ph = projectivize(&hyperbolic()).unwrap();
    assert_eq!((ph.x, ph.y, ph.z, ph.w, ph.d_p), (poly("t0*t1"), poly("2*t0*t2"), poly("t1^2 - t2^2"), poly("t0^2"), 2));

    let ph = projectivize(&circular()).unwrap();
    assert_eq!(ph.d_p, 6);
    assert_eq!(ph.x, poly("t0^3*t1^3"));
    assert_eq!(ph.y, poly("t0^5*t2"));
    assert_eq!(ph.z, poly("t1^6 + t0^4*t2^2"));
    assert_eq!(ph.w, poly("t0^6"));

    let cone = surface("t1^2", "t1*t2", "t2^2", "t1^2 + t2^2");
    let ph = projectivize(&cone).unwrap();
    assert_eq!((ph.x.clone(), ph.w.clone(), ph.d_p), (poly("t1^2"), poly("t1^2 + t2^2"), 2));
    // Setting t0 = 1 recovers the affine components.
    assert_eq!(ph.z, cone.numerators()[2]);
}

#[test]
fn normal_examples() {
    let p = hyperbolic();
    let nd = associated_normal(&p, &projectivize(&p).unwrap()).unwrap();
    assert!(vec_up_to_sign(&nd.big_n, ["-2*t1", "t2", "t0"]));
    assert!(vec_up_to_sign(&nd.n, ["-2*t1", "t2", "1"]));
    assert_eq!(nd.big_h, poly("4*t1^2 + t2^2 + t0^2"));
    // Sign convention: the first nonzero component has a positive leading coefficient.
    assert!(nd.big_n[0].has_positive_leading_coefficient());

    let p = circular();
    let nd = associated_normal(&p, &projectivize(&p).unwrap()).unwrap();
    assert!(vec_up_to_sign(&nd.big_n, ["-2*t1^3", "-2*t0^2*t2", "t0^3"]));

    let plane = polynomial_surface("t1", "t2", "0");
    let nd = associated_normal(&plane, &projectivize(&plane).unwrap()).unwrap();
    assert_eq!(nd.n, [poly("0"), poly("0"), poly("1")]);
    assert_eq!(nd.h, poly("1"));
}

#[test]
fn normal_is_orthogonal_to_tangents() {
    for p in [hyperbolic(), circular(), umbrella(), surface("2*t1", "t1^2 - t2", "t2^3", "t1^2 + 1")] {
        let nd = associated_normal(&p, &projectivize(&p).unwrap()).unwrap();
        let [p1, p2, p3] = p.numerators();
        for v in [Var::T1, Var::T2] {
            let tangent = tangent_numerators(p.p0(), [p1, p2, p3], v).unwrap();
            assert!(dot(&nd.n, &tangent).is_zero());
        }
    }
}

const HYPERBOLIC_T0: &str = "2*k1*t2*t0^2 - k1*t2*t1^2 + k1*t2^3 - t1*t0^2*k2 + 5*t1*t0*k3*t2 - 2*k2*t1^3 + 2*t1*k2*t2^2";

#[test]
fn affine_auxiliary_examples() {
    let p = hyperbolic();
    let nd = associated_normal(&p, &projectivize(&p).unwrap()).unwrap();
    let [s0, s1, _, _] = build_affine_auxiliary(&p, &nd);
    let printed = poly(HYPERBOLIC_T0).compose_var(Var::T0, &poly("1")).unwrap();
    assert!(same_up_to_sign(&s0, &printed));

    // k = n makes two rows of the determinant equal.
    let mut s0_at_n = s0.clone();
    for (k, n) in [Var::K1, Var::K2, Var::K3].into_iter().zip(&nd.n) {
        s0_at_n = s0_at_n.compose_var(k, n).unwrap();
    }
    assert!(s0_at_n.is_zero());

    // d = 0 leaves h*M1^2.
    let m1 = poly("k2*(t1^2 - t2^2) - k3*2*t2");
    assert_eq!(s1.compose_var(Var::D, &poly("0")).unwrap(), &nd.h * &m1.pow(2));
}

#[test]
fn projective_auxiliary_hyperbolic() {
    let p = hyperbolic();
    let ph = projectivize(&p).unwrap();
    let nd = associated_normal(&p, &ph).unwrap();
    let a = build_projective_auxiliary(&ph, &nd).unwrap();
    assert!(a.q.is_one());
    assert!(a.q0.is_one());
    assert!(same_up_to_sign(&a.t0, &poly(HYPERBOLIC_T0)));
    assert!(same_up_to_sign(&a.t[2], &poly(
        "t0^2*(4*k2^2*t1^4 - 16*t1^3*k2*k1*t2 + 16*k1^2*t1^2*t2^2 + k2^2*t1^2*t2^2 - 4*t2^3*k2*t1*k1 + 4*k1^2*t2^4 \
         + t0^2*k2^2*t1^2 - 4*k2*t1*t0^2*k1*t2 + 4*k1^2*t2^2*t0^2 - 4*t0^2*d^2*k2^2*t1^2 - 4*t0^2*d^2*t1*k2*k1*t2 \
         - t0^2*d^2*k1^2*t2^2)"
    )));
}

#[test]
fn projective_auxiliary_circular() {
    let p = circular();
    let ph = projectivize(&p).unwrap();
    let nd = associated_normal(&p, &ph).unwrap();
    let a = build_projective_auxiliary(&ph, &nd).unwrap();
    assert!(same_up_to_sign(&a.t0, &poly("-k2*t1^3 + k1*t0^2*t2")));
    let factor = poly("t0^6*(k2*t1^3 - k1*t0^2*t2)^2");
    let rest = a.t[2].div_exact(&factor).unwrap();
    assert!(same_up_to_sign(&rest, &poly("4*t1^6 + t0^6 + 4*t2^2*t0^4 - 4*d^2*t0^6")));
}

#[test]
fn sphere_like_input_fails_hypotheses() {
    // Bypasses the assumption checks: the position vector is normal everywhere.
    let p = surface("2*t1", "t1^2 + t2^2 - 1", "2*t2", "t1^2 + t2^2 + 1");
    let ph = projectivize(&p).unwrap();
    let nd = associated_normal(&p, &ph).unwrap();
    assert!(matches!(build_projective_auxiliary(&ph, &nd), Err(OffsetError::FormulaInapplicable(_))));

    // A shared factor among T1, T2, T3 is reported, not corrected.
    let q = hyperbolic();
    let ph = projectivize(&q).unwrap();
    let nd = associated_normal(&q, &ph).unwrap();
    let mut a = assemble_projective_auxiliary(&ph, &nd).unwrap();
    for t in a.t.iter_mut() {
        *t = &*t * &poly("t1 + t0");
    }
    match check_hypotheses(&a) {
        Err(OffsetError::FormulaInapplicable(msg)) => assert!(msg.contains("gcd(T1, T2, T3)"), "{msg}"),
        other => panic!("expected a hypothesis failure, got {other:?}"),
    }
}

#[test]
fn assumption_checks() {
    let sphere = surface("2*t1", "t1^2 + t2^2 - 1", "2*t2", "t1^2 + t2^2 + 1");
    match check_assumptions(&sphere) {
        Err(e @ OffsetError::AssumptionViolation { .. }) => {
            assert_eq!(e.exit_code(), 2);
            assert!(e.to_string().contains("sphere"));
        }
        other => panic!("expected a sphere violation, got {other:?}"),
    }
    let line = polynomial_surface("t1 + t2", "2*t1 + 2*t2", "t1 + t2");
    assert!(matches!(check_assumptions(&line), Err(OffsetError::AssumptionViolation { check, .. }) if check == "hodograph"));

    let checks = check_assumptions(&hyperbolic()).unwrap();
    assert!(checks.iter().all(|c| c.status != CheckStatus::Fail));
    assert!(checks.iter().any(|c| c.name == "origin" && c.status == CheckStatus::Info));

    // (X, Y, W) are forms of degree 2 in (t1, t2); only Z = t0*t1 involves t0.
    let cylinder = surface("t1^2", "t1*t2", "t1", "t1^2 + t2^2");
    let checks = check_assumptions(&cylinder).unwrap();
    assert!(checks.iter().any(|c| c.name == "cylinder" && c.status == CheckStatus::Warn));
}

#[test]
fn known_input_warnings_for_the_umbrella() {
    assert_eq!(known_input_warnings(&umbrella()).len(), 1);
    assert!(known_input_warnings(&umbrella())[0].contains("typo"));
    assert!(known_input_warnings(&hyperbolic()).is_empty());
}

#[test]
fn hyperbolic_degree() {
    let run = compute(&hyperbolic(), None).unwrap();
    assert_eq!(run.report.m_delta, 10);
    assert_eq!(run.report.delta, None);
    let square = poly("(t1 - t2)^2*(t1 + t2)^2");
    assert!(run.resultant.try_div_exact(&square).is_some());
    assert_eq!(run.report.deg_r, run.report.deg_m1 + run.report.deg_m2 + run.report.deg_m3);
}

#[test]
fn circular_degree_with_tracing_index() {
    let run = compute(&circular(), Some(3)).unwrap();
    assert_eq!((run.report.m_delta, run.report.delta), (18, Some(6)));
}

#[test]
fn umbrella_degree() {
    let run = compute(&umbrella(), None).unwrap();
    assert_eq!(run.report.m_delta, 14);
    assert_eq!(run.report.warnings.len(), 1);
}

#[test]
fn extract_degree_rejects_bad_tracing_index() {
    let run = compute(&hyperbolic(), None).unwrap();
    assert_eq!(extract_degree(&run.resultant, Some(2)).unwrap().delta, Some(5));
    assert_eq!(extract_degree(&run.resultant, Some(3)), Err(OffsetError::TracingIndex { m: 3, m_delta: 10 }));
}

#[test]
fn affine_and_projective_systems_agree() {
    for p in [hyperbolic(), circular(), surface("t1", "t2", "t1*t2", "t1 + 2")] {
        let ph = projectivize(&p).unwrap();
        let nd = associated_normal(&p, &ph).unwrap();
        let a = assemble_projective_auxiliary(&ph, &nd).unwrap();
        let s = build_affine_auxiliary(&p, &nd);
        let one = poly("1");
        let dehom = |q: &MultiPoly| q.compose_var(Var::T0, &one).unwrap();
        for i in 0..3 {
            assert_eq!(&dehom(&a.t[i]) * &dehom(&a.q), s[i + 1]);
        }
        assert!(same_up_to_sign(&(&dehom(&a.t0) * &dehom(&a.q0)), &s[0]));
    }
}
