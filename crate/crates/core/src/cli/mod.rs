//! Command-line front end: surface files in, degree reports out.

pub mod input;
pub mod parser;
pub mod report;

use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use clap::ValueEnum;

use crate::offset::{compute, normalize, CheckOutcome, OffsetError};
use crate::verify::{identity_suite, specialization_suite, SampleConfig, VerifyError};

pub use input::{parse_expression, InputError, SurfaceInput};
pub use report::Report;

/// Exit code of a run aborted by the wall-clock budget.
pub const EXIT_TIMEOUT: i32 = 5;

/// Coefficient bound for specialization draws.
const SAMPLE_BOUND: u32 = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Checks {
    /// Only the checks the pipeline needs anyway.
    None,
    /// Plus the algebraic identity suite.
    #[default]
    Fast,
    /// Plus randomized specialization of the resultant.
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOptions {
    pub checks: Checks,
    pub seed: u64,
    pub trials: usize,
    pub format: Format,
    pub timing: bool,
}

impl Default for RunOptions {
    fn default() -> RunOptions {
        RunOptions { checks: Checks::Fast, seed: 0, trials: 25, format: Format::Text, timing: false }
    }
}

/// Exit code plus the rendered report. Text-mode failures go to `stderr`;
/// JSON reports always go to `stdout`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutcome {
    pub exit_code: i32,
    pub report: Report,
    pub stdout: String,
    pub stderr: String,
}

impl RunOutcome {
    fn render(report: Report, format: Format) -> RunOutcome {
        let exit_code = report.exit_code;
        let (stdout, stderr) = match format {
            Format::Json => (report.to_json(), String::new()),
            Format::Text if exit_code == 0 => (report.to_text(), String::new()),
            Format::Text => (String::new(), report.to_text()),
        };
        RunOutcome { exit_code, report, stdout, stderr }
    }
}

fn error_kind(e: &OffsetError) -> &'static str {
    match e {
        OffsetError::Poly(_) => "polynomial",
        OffsetError::Elim(_) => "elimination",
        OffsetError::ZeroDenominator => "zero_denominator",
        OffsetError::NotSurfaceVariables => "not_surface_variables",
        OffsetError::ConstantMap => "constant_map",
        OffsetError::DegenerateNormal => "degenerate_normal",
        OffsetError::AssumptionViolation { .. } => "assumption_violation",
        OffsetError::FormulaInapplicable(_) => "formula_inapplicable",
        OffsetError::TracingIndex { .. } => "tracing_index",
        OffsetError::Internal(_) => "internal",
    }
}

fn fail_offset(report: &mut Report, e: &OffsetError) {
    if let OffsetError::AssumptionViolation { check, detail } = e {
        report.checks.push(CheckOutcome::fail(check, detail.clone()));
    }
    report.fail(e.exit_code(), error_kind(e), e.to_string());
}

fn fail_verify(report: &mut Report, e: &VerifyError) {
    match e {
        VerifyError::Offset(e) => fail_offset(report, e),
        VerifyError::Config(_) => report.fail(1, "usage", e.to_string()),
        _ => report.fail(4, "internal", e.to_string()),
    }
}

/// Parses a surface file and runs it.
pub fn run_text(text: &str, opts: &RunOptions) -> RunOutcome {
    match SurfaceInput::parse(text) {
        Ok(input) => run(&input, opts),
        Err(e) => {
            let mut report = Report::empty(None);
            report.fail(1, "input", e.to_string());
            RunOutcome::render(report, opts.format)
        }
    }
}

/// Runs the whole pipeline plus the requested verification suites.
pub fn run(input: &SurfaceInput, opts: &RunOptions) -> RunOutcome {
    let mut report = Report::empty(input.label.clone());
    execute(input, opts, &mut report);
    if !opts.timing {
        report.timings_ms.clear();
    }
    RunOutcome::render(report, opts.format)
}

fn execute(input: &SurfaceInput, opts: &RunOptions, report: &mut Report) {
    report.m = input.tracing_index;
    let cfg = match SampleConfig::new(opts.seed, opts.trials, SAMPLE_BOUND) {
        Ok(cfg) => cfg,
        Err(e) => return fail_verify(report, &e),
    };
    let raw = match input.rational_functions() {
        Ok(raw) => raw,
        Err(e) => return report.fail(1, "input", e.to_string()),
    };
    let p = match normalize(&raw) {
        Ok(p) => p,
        Err(e) => return fail_offset(report, &e),
    };
    let run = match compute(&p, input.tracing_index) {
        Ok(run) => run,
        Err(e) => return fail_offset(report, &e),
    };
    report.fill_from_run(&run, input.tracing_index);
    report.timings_ms = run.report.timings_ms.clone();

    if opts.checks == Checks::None {
        return;
    }
    let start = Instant::now();
    let identities = match identity_suite(&run.parametrization, &run.normal, &run.auxiliary) {
        Ok(r) => r,
        Err(e) => return fail_verify(report, &e),
    };
    report.timings_ms.insert("identities".into(), start.elapsed().as_millis() as u64);
    let total = identities.outcomes.len();
    if identities.ok() {
        report.checks.push(CheckOutcome::pass("identities", format!("{total} of {total} identities hold")));
    } else {
        let failed = identities.failures().join("; ");
        report.checks.push(CheckOutcome::fail("identities", format!("failed: {failed}")));
        return report.fail(4, "internal", format!("identity suite failed: {failed}"));
    }

    if opts.checks != Checks::All {
        return;
    }
    let start = Instant::now();
    let sampled = match specialization_suite(&run.auxiliary, &run.resultant, &cfg) {
        Ok(r) => r,
        Err(e) => return fail_verify(report, &e),
    };
    report.timings_ms.insert("specialization".into(), start.elapsed().as_millis() as u64);
    let summary = format!(
        "{} of {} trials agree (seed {}, {} degenerate redraws)",
        sampled.passes, sampled.trials, cfg.seed, sampled.redraws
    );
    if !sampled.failures.is_empty() {
        report.checks.push(CheckOutcome::fail("specialization", summary.clone()));
        return report.fail(4, "internal", format!("specialization suite failed: {summary}"));
    }
    if sampled.inconclusive {
        report.checks.push(CheckOutcome::warn("specialization", format!("inconclusive, redraw budget exhausted: {summary}")));
    } else {
        report.checks.push(CheckOutcome::pass("specialization", summary));
    }
}

/// [`run`] on a worker thread, abandoned once `budget` elapses.
pub fn run_with_budget(input: &SurfaceInput, opts: &RunOptions, budget: Option<Duration>) -> RunOutcome {
    let Some(budget) = budget else {
        return run(input, opts);
    };
    let (tx, rx) = mpsc::channel();
    let (worker_input, worker_opts) = (input.clone(), opts.clone());
    thread::spawn(move || {
        let _ = tx.send(run(&worker_input, &worker_opts));
    });
    match rx.recv_timeout(budget) {
        Ok(outcome) => outcome,
        Err(_) => {
            let mut report = Report::empty(input.label.clone());
            report.m = input.tracing_index;
            report.fail(EXIT_TIMEOUT, "timeout", format!("wall-clock budget of {:.3} s exceeded", budget.as_secs_f64()));
            RunOutcome::render(report, opts.format)
        }
    }
}

/// Reads the wall-clock budget in seconds from `value`, as found in
/// `OFFSETDEG_MAX_SECONDS`.
pub fn parse_budget(value: &str) -> Result<Duration, String> {
    let secs: f64 = value.trim().parse().map_err(|_| format!("not a number of seconds: `{value}`"))?;
    if !secs.is_finite() || secs <= 0.0 {
        return Err(format!("budget must be a positive number of seconds, got `{value}`"));
    }
    Ok(Duration::from_secs_f64(secs))
}
