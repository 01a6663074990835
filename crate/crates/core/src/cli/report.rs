//! The run report and its text and JSON renderings.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use crate::mvpoly::MultiPoly;
use crate::offset::{projective_vars, CheckOutcome, OffsetRun};

/// `P0, ..., P3` of the normalized parametrization in canonical text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyEcho {
    #[serde(rename = "P0")]
    pub p0: String,
    #[serde(rename = "P1")]
    pub p1: String,
    #[serde(rename = "P2")]
    pub p2: String,
    #[serde(rename = "P3")]
    pub p3: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TDegree {
    pub name: String,
    pub deg_t0: u32,
    pub deg_total: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResultantDegrees {
    #[serde(rename = "R")]
    pub r: u32,
    #[serde(rename = "M1")]
    pub m1: u32,
    #[serde(rename = "M2")]
    pub m2: u32,
    #[serde(rename = "M3")]
    pub m3: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
}

/// Everything a run reports. The key set is the same for successful and
/// failed runs; sections a failed run never reached are `null`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub status: &'static str,
    pub exit_code: i32,
    pub label: Option<String>,
    pub parametrization: Option<PolyEcho>,
    pub d_p: Option<u32>,
    #[serde(rename = "N")]
    pub n: Option<[String; 3]>,
    #[serde(rename = "H")]
    pub h: Option<String>,
    #[serde(rename = "Q")]
    pub q: Option<String>,
    #[serde(rename = "Q0")]
    pub q0: Option<String>,
    #[serde(rename = "T")]
    pub t: Option<Vec<TDegree>>,
    pub degrees: Option<ResultantDegrees>,
    pub m: Option<u32>,
    pub m_delta: Option<u32>,
    pub delta: Option<u32>,
    pub error: Option<ErrorInfo>,
    pub checks: Vec<CheckOutcome>,
    pub warnings: Vec<String>,
    pub timings_ms: BTreeMap<String, u64>,
}

fn degree_pair(p: &MultiPoly) -> (u32, u32) {
    let pv = projective_vars();
    (p.degree_in(crate::mvpoly::Var::T0), p.degree(pv).unwrap_or(0))
}

impl Report {
    pub fn empty(label: Option<String>) -> Report {
        Report {
            status: "ok",
            exit_code: 0,
            label,
            parametrization: None,
            d_p: None,
            n: None,
            h: None,
            q: None,
            q0: None,
            t: None,
            degrees: None,
            m: None,
            m_delta: None,
            delta: None,
            error: None,
            checks: Vec::new(),
            warnings: Vec::new(),
            timings_ms: BTreeMap::new(),
        }
    }

    pub fn fill_from_run(&mut self, run: &OffsetRun, m: Option<u32>) {
        let p = &run.parametrization;
        let [p1, p2, p3] = p.numerators();
        self.parametrization =
            Some(PolyEcho { p0: p.p0().to_string(), p1: p1.to_string(), p2: p2.to_string(), p3: p3.to_string() });
        self.d_p = Some(run.projective.d_p);
        self.n = Some(run.normal.big_n.clone().map(|c| c.to_string()));
        self.h = Some(run.normal.big_h.to_string());
        self.q = Some(run.auxiliary.q.to_string());
        self.q0 = Some(run.auxiliary.q0.to_string());
        let mut t = Vec::with_capacity(4);
        for (i, ti) in std::iter::once(&run.auxiliary.t0).chain(&run.auxiliary.t).enumerate() {
            let (deg_t0, deg_total) = degree_pair(ti);
            t.push(TDegree { name: format!("T{i}"), deg_t0, deg_total });
        }
        self.t = Some(t);
        let r = &run.report;
        self.degrees = Some(ResultantDegrees { r: r.deg_r, m1: r.deg_m1, m2: r.deg_m2, m3: r.deg_m3 });
        self.m = m;
        self.m_delta = Some(r.m_delta);
        self.delta = r.delta;
        self.checks = r.checks.clone();
        self.warnings = r.warnings.clone();
    }

    pub fn fail(&mut self, exit_code: i32, kind: &str, message: String) {
        self.status = "error";
        self.exit_code = exit_code;
        self.error = Some(ErrorInfo { kind: kind.into(), message });
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if let Some(label) = &self.label {
            let _ = writeln!(s, "surface: {label}");
        }
        if let Some(p) = &self.parametrization {
            let _ = writeln!(s, "P      = ({}, {}, {}) / ({})", p.p1, p.p2, p.p3, p.p0);
        }
        if let Some(d) = self.d_p {
            let _ = writeln!(s, "d_P    = {d}");
        }
        if let Some([a, b, c]) = &self.n {
            let _ = writeln!(s, "N      = ({a}, {b}, {c})");
        }
        for (name, v) in [("H", &self.h), ("Q", &self.q), ("Q0", &self.q0)] {
            if let Some(v) = v {
                let _ = writeln!(s, "{name:<6} = {v}");
            }
        }
        if let Some(ts) = &self.t {
            for t in ts {
                let _ = writeln!(s, "{:<6} : deg_t0 = {}, total degree = {}", t.name, t.deg_t0, t.deg_total);
            }
        }
        if let Some(d) = &self.degrees {
            let _ = writeln!(s, "deg R  = {}, deg M1 = {}, deg M2 = {}, deg M3 = {}", d.r, d.m1, d.m2, d.m3);
        }
        if let Some(md) = self.m_delta {
            let _ = writeln!(s, "m*delta = {md}");
        }
        match (self.m, self.delta) {
            (Some(m), Some(delta)) => {
                let _ = writeln!(s, "delta   = {delta} (tracing index m = {m})");
            }
            _ if self.m_delta.is_some() => {
                let _ = writeln!(s, "delta   = m*delta / m, tracing index not supplied");
            }
            _ => {}
        }
        if let Some(e) = &self.error {
            let _ = writeln!(s, "error ({}): {}", e.kind, e.message);
        }
        if !self.checks.is_empty() {
            let _ = writeln!(s, "checks:");
            for c in &self.checks {
                let status = serde_json::to_value(c.status).expect("status serializes");
                let _ = writeln!(s, "  [{}] {}: {}", status.as_str().unwrap_or("?"), c.name, c.detail);
            }
        }
        if !self.warnings.is_empty() {
            let _ = writeln!(s, "warnings:");
            for w in &self.warnings {
                let _ = writeln!(s, "  {w}");
            }
        }
        if !self.timings_ms.is_empty() {
            let _ = writeln!(s, "timings (ms):");
            for (stage, ms) in &self.timings_ms {
                let _ = writeln!(s, "  {stage}: {ms}");
            }
        }
        s
    }
}
