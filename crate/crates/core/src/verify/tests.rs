use super::*;
use crate::offset::{compute, normalize, OffsetRun, RationalFunction};
use crate::testutil::{poly, rat};

fn run(p1: &str, p2: &str, p3: &str) -> OffsetRun {
    let p = normalize(&[p1, p2, p3].map(|s| RationalFunction::polynomial(poly(s)))).unwrap();
    compute(&p, None).unwrap()
}

fn cfg(seed: u64, trials: usize) -> SampleConfig {
    SampleConfig::new(seed, trials, 7).unwrap()
}

#[test]
fn sample_config_validation() {
    assert!(SampleConfig::new(1, 0, 5).is_err());
    assert!(SampleConfig::new(1, 5, 1).is_err());
    assert!(SampleConfig::new(1, 1, 2).is_ok());
}

#[test]
fn specialization_on_the_hyperbolic_paraboloid() {
    let r = run("t1", "2*t2", "t1^2 - t2^2");
    let rep = specialization_suite(&r.auxiliary, &r.resultant, &cfg(42, 50)).unwrap();
    assert_eq!(rep.passes, 50);
    assert!(rep.ok());
    assert!(rep.redraws <= 5, "{} redraws", rep.redraws);
}

#[test]
fn zero_distance_is_a_degenerate_draw() {
    let r = run("t1", "2*t2", "t1^2 - t2^2");
    let t = generic_combination(&r.auxiliary);
    let mut point: Vec<(Var, BigRational)> = SPECIALIZED.iter().map(|&v| (v, rat(1, 2))).collect();
    assert_eq!(classify_point(&r.auxiliary, &t, &point).unwrap(), None);
    point[0].1 = rat(0, 1);
    assert_eq!(classify_point(&r.auxiliary, &t, &point).unwrap(), Some(Degeneracy::ZeroDistance));
    point[0].1 = rat(1, 1);
    point[2].1 = rat(0, 1);
    assert_eq!(classify_point(&r.auxiliary, &t, &point).unwrap(), Some(Degeneracy::ZeroDirection));
}

#[test]
fn corrupted_resultant_is_caught() {
    let r = run("t1", "2*t2", "t1^2 - t2^2");
    let (m, c) = r.resultant.terms()[3].clone();
    let bumped = &r.resultant + &MultiPoly::monomial(r.resultant.universe(), m, BigInt::from(1));
    assert_ne!(bumped.coefficient(&m), c);
    let rep = specialization_suite(&r.auxiliary, &bumped, &cfg(42, 10)).unwrap();
    assert!(!rep.ok());
    assert_eq!(rep.failures.len(), 10);
    assert_eq!(rep.failures[0].point.len(), SPECIALIZED.len());
    assert!(rep.failures[0].point[0].starts_with("d = "));
}

#[test]
fn identities_hold_on_the_examples() {
    for (p1, p2, p3) in [("t1", "2*t2", "t1^2 - t2^2"), ("t1^3", "t2", "t1^6 + t2^2"), ("t1*t2", "t2", "t1^2")] {
        let r = run(p1, p2, p3);
        let rep = identity_suite(&r.parametrization, &r.normal, &r.auxiliary).unwrap();
        assert!(rep.ok(), "{:?}", rep.failures());
        assert!(rep.outcomes.len() >= 10);
    }
}

#[test]
fn identities_hold_on_a_plane() {
    let p = normalize(&["t1", "t2", "0"].map(|s| RationalFunction::polynomial(poly(s)))).unwrap();
    let ph = projectivize(&p).unwrap();
    let nd = crate::offset::associated_normal(&p, &ph).unwrap();
    assert_eq!(nd.big_n, [poly("0"), poly("0"), poly("1")]);
    let a = crate::offset::assemble_projective_auxiliary(&ph, &nd).unwrap();
    assert!(identity_suite(&p, &nd, &a).unwrap().ok());
}

#[test]
fn mutated_u2_breaks_a_syzygy() {
    let mut r = run("t1", "2*t2", "t1^2 - t2^2");
    r.auxiliary.u[1] = &r.auxiliary.u[1] + &poly("t0");
    let rep = identity_suite(&r.parametrization, &r.normal, &r.auxiliary).unwrap();
    assert!(!rep.ok());
    assert!(rep.failures().contains(&"X*U1 + Y*U2 + Z*U3 = 0"));
}

#[test]
fn oracle_suite_small() {
    let rep = oracle_suite(&cfg(3, 40)).unwrap();
    assert_eq!((rep.resultant_pairs, rep.gcd_trials, rep.content_trials), (40, 40, 40));
    assert!(rep.ok(), "{:?}", rep.failures);
}

#[test]
fn suites_are_deterministic() {
    assert_eq!(oracle_suite(&cfg(9, 10)).unwrap(), oracle_suite(&cfg(9, 10)).unwrap());
    let mut a = ChaCha8Rng::seed_from_u64(5);
    let mut b = ChaCha8Rng::seed_from_u64(5);
    assert_eq!(random_parametrization(&mut a, 3, 5), random_parametrization(&mut b, 3, 5));
}
