//! The degree pipeline: normalize a rational surface parametrization, build
//! its projective auxiliary system, take the generalized resultant and read
//! off `m·δ`, the tracing index times the total degree of the generic offset.

mod assumptions;
mod auxiliary;
mod degree;
mod normal;
mod param;

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::eliminate::ElimError;
use crate::mvpoly::{MultiPoly, PolyError};

pub use assumptions::{check_assumptions, known_input_warnings};
pub use auxiliary::{
    assemble_projective_auxiliary, build_affine_auxiliary, build_projective_auxiliary, check_hypotheses, k_vector,
    AuxiliarySystem,
};
pub use degree::{
    c_vars, dk_vars, extract_degree, factor_resultant, generalized_resultant, generic_combination,
    report_from_factors, verify_factorization, DegreeReport, Factors,
};
pub use normal::{affine_normal, associated_normal, cross, dot, reduce_vector, tangent_numerators, NormalData, Vec3};
pub use param::{
    normalize, projective_vars, projectivize, surface_vars, Parametrization, ProjectiveParametrization,
    RationalFunction,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OffsetError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Elim(#[from] ElimError),
    #[error("a component has a zero denominator")]
    ZeroDenominator,
    #[error("parametrization components may only involve t1 and t2")]
    NotSurfaceVariables,
    #[error("the parametrization is constant")]
    ConstantMap,
    #[error("the cross product of the tangent vectors vanishes identically")]
    DegenerateNormal,
    #[error("assumption violated ({check} check): {detail}")]
    AssumptionViolation { check: String, detail: String },
    #[error("degree formula inapplicable: {0}")]
    FormulaInapplicable(String),
    #[error("tracing index {m} does not divide m*delta = {m_delta}")]
    TracingIndex { m: u32, m_delta: u32 },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl OffsetError {
    /// Process exit code: 1 bad input, 2 assumption violation, 3 formula
    /// inapplicable, 4 internal inconsistency.
    pub fn exit_code(&self) -> i32 {
        match self {
            OffsetError::ZeroDenominator | OffsetError::NotSurfaceVariables | OffsetError::TracingIndex { .. } => 1,
            OffsetError::ConstantMap | OffsetError::DegenerateNormal | OffsetError::AssumptionViolation { .. } => 2,
            OffsetError::FormulaInapplicable(_) => 3,
            OffsetError::Poly(_) | OffsetError::Elim(_) | OffsetError::Internal(_) => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Warn,
    Info,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckOutcome {
    pub fn new(name: &str, status: CheckStatus, detail: impl Into<String>) -> CheckOutcome {
        CheckOutcome { name: name.into(), status, detail: detail.into() }
    }

    pub fn pass(name: &str, detail: impl Into<String>) -> CheckOutcome {
        CheckOutcome::new(name, CheckStatus::Pass, detail)
    }

    pub fn warn(name: &str, detail: impl Into<String>) -> CheckOutcome {
        CheckOutcome::new(name, CheckStatus::Warn, detail)
    }

    pub fn info(name: &str, detail: impl Into<String>) -> CheckOutcome {
        CheckOutcome::new(name, CheckStatus::Info, detail)
    }

    pub fn fail(name: &str, detail: impl Into<String>) -> CheckOutcome {
        CheckOutcome::new(name, CheckStatus::Fail, detail)
    }
}

/// Every intermediate object of one pipeline run.
#[derive(Debug, Clone)]
pub struct OffsetRun {
    pub parametrization: Parametrization,
    pub projective: ProjectiveParametrization,
    pub normal: NormalData,
    pub auxiliary: AuxiliarySystem,
    pub resultant: MultiPoly,
    pub factors: Factors,
    pub report: DegreeReport,
}

struct Stopwatch {
    timings: BTreeMap<String, u64>,
    start: Instant,
}

impl Stopwatch {
    fn new() -> Stopwatch {
        Stopwatch { timings: BTreeMap::new(), start: Instant::now() }
    }

    fn lap(&mut self, stage: &str) {
        let now = Instant::now();
        self.timings.insert(stage.into(), (now - self.start).as_millis() as u64);
        self.start = now;
    }
}

/// Runs the whole pipeline on a normalized parametrization. `m` is the
/// tracing index, if known.
pub fn compute(p: &Parametrization, m: Option<u32>) -> Result<OffsetRun, OffsetError> {
    let mut clock = Stopwatch::new();
    let mut checks = check_assumptions(p)?;
    clock.lap("assumptions");
    let projective = projectivize(p)?;
    clock.lap("projectivize");
    let normal = associated_normal(p, &projective)?;
    clock.lap("normal");
    let auxiliary = build_projective_auxiliary(&projective, &normal)?;
    checks.push(CheckOutcome::pass("hypotheses", "T1, T2, T3 satisfy the generalized-resultant hypotheses"));
    clock.lap("auxiliary");
    let resultant = generalized_resultant(&auxiliary)?;
    clock.lap("resultant");
    let factors = factor_resultant(&resultant)?;
    checks.push(CheckOutcome::pass("factorization", "R = M1*M2*M3 verified by exact division"));
    clock.lap("factor");
    let mut report = report_from_factors(&resultant, &factors, m)?;
    report.checks = checks;
    report.warnings = known_input_warnings(p);
    report.timings_ms = clock.timings;
    Ok(OffsetRun { parametrization: p.clone(), projective, normal, auxiliary, resultant, factors, report })
}

#[cfg(test)]
mod tests;
