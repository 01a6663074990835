//! Independent checks of a pipeline run: exact algebraic identities,
//! specialization of the generalized resultant at random rational points,
//! and brute-force oracles for the elimination primitives.

mod random;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::eliminate::{content_and_primitive_part, gcd, gcd_all, resultant, resultant_oracle, ElimError};
use crate::mvpoly::{MultiPoly, PolyError, Var, VarSet};
use crate::offset::{
    generic_combination, projectivize, tangent_numerators, AuxiliarySystem, NormalData, OffsetError, Parametrization,
};

pub use random::{random_parametrization, random_poly, random_rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("invalid sample configuration: {0}")]
    Config(&'static str),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Elim(#[from] ElimError),
    #[error(transparent)]
    Offset(#[from] OffsetError),
}

/// Seed, trial count and coefficient bound for randomized suites. Rational
/// samples have numerators in `[-bound, bound] \ {0}` and denominators in
/// `[1, bound]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SampleConfig {
    pub seed: u64,
    pub trials: usize,
    pub bound: u32,
}

impl SampleConfig {
    pub fn new(seed: u64, trials: usize, bound: u32) -> Result<SampleConfig, VerifyError> {
        if trials == 0 {
            return Err(VerifyError::Config("trials must be at least 1"));
        }
        if bound < 2 {
            return Err(VerifyError::Config("bound must be at least 2"));
        }
        Ok(SampleConfig { seed, trials, bound })
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

// ------------------------------------------------------------ specialization

/// Parameters a specialization draw assigns.
pub const SPECIALIZED: [Var; 7] = [Var::D, Var::K1, Var::K2, Var::K3, Var::C1, Var::C2, Var::C3];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecializationFailure {
    pub trial: usize,
    /// `name = value` for each specialized parameter.
    pub point: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecializationReport {
    pub trials: usize,
    pub passes: usize,
    pub failures: Vec<SpecializationFailure>,
    pub redraws: usize,
    /// The redraw budget ran out before every trial completed.
    pub inconclusive: bool,
}

impl SpecializationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && !self.inconclusive
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degeneracy {
    ZeroDistance,
    ZeroDirection,
    VanishingLeadingCoefficient,
}

/// Why a point is unusable for the specialization check, if it is.
pub fn classify_point(a: &AuxiliarySystem, t: &MultiPoly, point: &[(Var, BigRational)]) -> Result<Option<Degeneracy>, VerifyError> {
    use num_traits::Zero;
    for (v, val) in point {
        if val.is_zero() {
            return Ok(Some(if *v == Var::D { Degeneracy::ZeroDistance } else { Degeneracy::ZeroDirection }));
        }
    }
    for p in [&a.t0, t] {
        let (lc, _) = p.leading_coefficient_in(Var::T0).substitute(point)?;
        if lc.is_zero() {
            return Ok(Some(Degeneracy::VanishingLeadingCoefficient));
        }
    }
    Ok(None)
}

/// Checks `R(point) = Res_{t0}(T0(point), T(point))` at random rational
/// points, clearing denominators on both sides.
pub fn specialization_suite(a: &AuxiliarySystem, r: &MultiPoly, cfg: &SampleConfig) -> Result<SpecializationReport, VerifyError> {
    let mut rng = cfg.rng();
    let t = generic_combination(a);
    let budget = 10 * cfg.trials;
    let mut report = SpecializationReport { trials: cfg.trials, passes: 0, failures: Vec::new(), redraws: 0, inconclusive: false };
    'trials: for trial in 0..cfg.trials {
        let point = loop {
            let point: Vec<(Var, BigRational)> = SPECIALIZED.iter().map(|&v| (v, random_rational(&mut rng, cfg.bound))).collect();
            if classify_point(a, &t, &point)?.is_none() {
                break point;
            }
            report.redraws += 1;
            if report.redraws > budget {
                report.inconclusive = true;
                break 'trials;
            }
        };
        if specializes_at(a, &t, r, &point)? {
            report.passes += 1;
        } else {
            let u = r.universe();
            report.failures.push(SpecializationFailure {
                trial,
                point: point.iter().map(|(v, x)| format!("{} = {}", u.name(*v), x)).collect(),
            });
        }
    }
    Ok(report)
}

fn specializes_at(a: &AuxiliarySystem, t: &MultiPoly, r: &MultiPoly, point: &[(Var, BigRational)]) -> Result<bool, VerifyError> {
    let (r_num, r_den) = r.substitute(point)?;
    let (f, f_den) = a.t0.substitute(point)?;
    let (g, g_den) = t.substitute(point)?;
    let (df, dg) = (f.degree_in(Var::T0), g.degree_in(Var::T0));
    let direct = resultant(&f, &g, Var::T0)?;
    // Res(f / a, g / b) = Res(f, g) / (a^deg g * b^deg f)
    let scale: BigInt = num_traits::pow(f_den, dg as usize) * num_traits::pow(g_den, df as usize);
    Ok(r_num.scale(&scale) == direct.scale(&r_den))
}

// ---------------------------------------------------------------- identities

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityOutcome {
    pub identity: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub outcomes: Vec<IdentityOutcome>,
}

impl IdentityReport {
    pub fn ok(&self) -> bool {
        self.outcomes.iter().all(|o| o.holds)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.outcomes.iter().filter(|o| !o.holds).map(|o| o.identity.as_str()).collect()
    }

    fn record(&mut self, identity: impl Into<String>, holds: bool) {
        self.outcomes.push(IdentityOutcome { identity: identity.into(), holds });
    }
}

/// Exact polynomial identities that every run must satisfy. The auxiliary
/// polynomials are rebuilt here term by term rather than reusing the
/// pipeline's helpers.
pub fn identity_suite(p: &Parametrization, nd: &NormalData, a: &AuxiliarySystem) -> Result<IdentityReport, VerifyError> {
    let u = p.universe();
    let ph = projectivize(p)?;
    let (x, y, z, w) = (&ph.x, &ph.y, &ph.z, &ph.w);
    let [n1, n2, n3] = &nd.big_n;
    let [u1, u2, u3] = &a.u;
    let var = |v: Var| MultiPoly::var(u, v);
    let (d, k1, k2, k3) = (var(Var::D), var(Var::K1), var(Var::K2), var(Var::K3));
    let mut rep = IdentityReport { outcomes: Vec::new() };

    rep.record("X*U1 + Y*U2 + Z*U3 = 0", (x * u1 + y * u2 + z * u3).is_zero());
    rep.record("N1*U1 + N2*U2 + N3*U3 = 0", (n1 * u1 + n2 * u2 + n3 * u3).is_zero());
    rep.record("gcd(U1, U2, U3) = 1", gcd_all(a.u.iter())?.is_one());

    let [p1, p2, p3] = p.numerators();
    for (name, v) in [("t1", Var::T1), ("t2", Var::T2)] {
        let tan = tangent_numerators(p.p0(), [p1, p2, p3], v)?;
        let dot = &nd.n[0] * &tan[0] + &nd.n[1] * &tan[1] + &nd.n[2] * &tan[2];
        rep.record(format!("n is orthogonal to the {name}-tangent"), dot.is_zero());
    }
    rep.record("h = n1^2 + n2^2 + n3^2", nd.h == nd.n.iter().fold(MultiPoly::zero(u), |s, c| s + c.pow(2)));
    rep.record("H = N1^2 + N2^2 + N3^2", nd.big_h == nd.big_n.iter().fold(MultiPoly::zero(u), |s, c| s + c.pow(2)));

    let m = [&k2 * z - &k3 * y, &k3 * x - &k1 * z, &k1 * y - &k2 * x];
    let g = [&k2 * n3 - &k3 * n2, &k3 * n1 - &k1 * n3, &k1 * n2 - &k2 * n1];
    let dw2 = (&d * w).pow(2);
    for i in 0..3 {
        let s = &nd.big_h * &m[i].pow(2) - &dw2 * &g[i].pow(2);
        rep.record(format!("T{0}*Q = H*M{0}^2 - d^2*W^2*G{0}^2", i + 1), &a.t[i] * &a.q == s);
    }
    let s0 = &k1 * &(y * n3 - z * n2) - &k2 * &(x * n3 - z * n1) + &k3 * &(x * n2 - y * n1);
    rep.record("T0*Q0 = S0", &a.t0 * &a.q0 == s0);
    rep.record("T0 = k1*U1 + k2*U2 + k3*U3", a.t0 == &k1 * u1 + &k2 * u2 + &k3 * u3);
    Ok(rep)
}

// ------------------------------------------------------------------- oracles

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleFailure {
    pub check: String,
    pub witness: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub resultant_pairs: usize,
    pub gcd_trials: usize,
    pub content_trials: usize,
    pub failures: Vec<OracleFailure>,
}

impl OracleReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

const ORACLE_VARS: [Var; 4] = [Var::T0, Var::T1, Var::T2, Var::K1];

/// Random small-degree comparisons of the fast elimination routines with
/// brute force: `cfg.trials` resultant pairs (Sylvester dimension at most 8),
/// and as many gcd and content reconstructions.
pub fn oracle_suite(cfg: &SampleConfig) -> Result<OracleReport, VerifyError> {
    let mut rng = cfg.rng();
    let u = crate::mvpoly::VariableUniverse::offset_default();
    let vars = VarSet::of(&ORACLE_VARS);
    let b = cfg.bound as i64;
    let mut rep = OracleReport { resultant_pairs: 0, gcd_trials: 0, content_trials: 0, failures: Vec::new() };
    let fail = |check: &str, polys: &[&MultiPoly]| OracleFailure {
        check: check.into(),
        witness: polys.iter().map(|p| p.to_string()).collect(),
    };

    while rep.resultant_pairs < cfg.trials {
        let f = random_poly(&mut rng, &u, vars, 4, 5, b);
        let g = random_poly(&mut rng, &u, vars, 4, 5, b);
        if f.is_zero() || g.is_zero() || f.degree_in(Var::T0) + g.degree_in(Var::T0) == 0 {
            continue;
        }
        rep.resultant_pairs += 1;
        if resultant(&f, &g, Var::T0)? != resultant_oracle(&f, &g, Var::T0)? {
            rep.failures.push(fail("resultant agrees with cofactor expansion", &[&f, &g]));
        }
        // A shared factor of positive degree in t0 kills the resultant.
        let h = random_poly(&mut rng, &u, vars, 1, 3, b) + MultiPoly::var(&u, Var::T0);
        if !h.depends_on(Var::T0) {
            continue;
        }
        if !resultant(&(&f * &h), &(&g * &h), Var::T0)?.is_zero() {
            rep.failures.push(fail("resultant vanishes on a common factor", &[&f, &g, &h]));
        }
    }

    while rep.gcd_trials < cfg.trials {
        let common = random_poly(&mut rng, &u, vars, 2, 3, b);
        let a = random_poly(&mut rng, &u, vars, 2, 3, b);
        let c = random_poly(&mut rng, &u, vars, 2, 3, b);
        if common.is_zero() || a.is_zero() || c.is_zero() {
            continue;
        }
        rep.gcd_trials += 1;
        let (pa, pc) = (&common * &a, &common * &c);
        let g = gcd(&pa, &pc)?;
        let divides = pa.try_div_exact(&g).is_some() && pc.try_div_exact(&g).is_some() && g.try_div_exact(&common).is_some();
        let coprime = divides && gcd(&pa.div_exact(&g)?, &pc.div_exact(&g)?)?.is_one();
        if !(divides && coprime && g.has_positive_leading_coefficient()) {
            rep.failures.push(fail("gcd reconstruction", &[&common, &a, &c]));
        }
        if gcd(&a, &MultiPoly::zero(&u))? != a.clone().normalize_sign() {
            rep.failures.push(fail("gcd(p, 0) is the normalized p", &[&a]));
        }
    }

    while rep.content_trials < cfg.trials {
        let p = random_poly(&mut rng, &u, vars, 3, 6, b);
        if p.is_zero() {
            continue;
        }
        rep.content_trials += 1;
        let subset: VarSet = ORACLE_VARS.iter().copied().filter(|_| rand::Rng::gen_bool(&mut rng, 0.5)).collect();
        let (c, pp) = content_and_primitive_part(&p, subset)?;
        if &c * &pp != p || !content_and_primitive_part(&pp, subset)?.0.is_one() {
            rep.failures.push(fail("content times primitive part", &[&p]));
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests;
