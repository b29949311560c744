//! Report generation for each subcommand and the verification suites.

use std::ops::RangeInclusive;

use charvar_core::pretzel::{
    p_closed, p_trace, q_closed, q_trace_bounded, resultant_report, seidenberg_check, witness_reports, x0_slice_report,
    DEFAULT_TRACE_BOUND,
};
use charvar_core::qtorus::{algebra_reports, unknot_demo};
use charvar_core::sl2trace::trace_oracle_report;
use charvar_core::twobridge::{analyze, irreducibility_report, TwoBridgeKnot};
use charvar_core::VerificationReport;
use rayon::prelude::*;

/// Largest `|n|` for the matrix witnesses.
pub const WITNESS_BOUND: i64 = 6;
/// Leading terms of the trimmed traces are checked up to this `p`.
pub const LEADING_TERMS_P_MAX: u32 = 31;
/// Largest `p` whose `Φ_d` is handed to the factor oracle.
pub const IRREDUCIBILITY_P_MAX: u32 = 23;
pub const ALGEBRA_CASES: usize = 200;
pub const ORACLE_WORDS: usize = 500;
pub const ORACLE_MAX_LEN: usize = 12;
pub const ORACLE_TRIALS: usize = 20;
pub const UNKNOT_WINDOW: RangeInclusive<i64> = -20..=20;

/// Default pretzel windows, one per kind of check.
pub struct PretzelWindows {
    pub trace_forms: RangeInclusive<i64>,
    pub resultant: RangeInclusive<i64>,
    pub slice: RangeInclusive<i64>,
    pub witnesses: RangeInclusive<i64>,
}

/// `n..=n`, or an empty window when the check is out of reach for `n`.
pub fn single(n: i64, enabled: bool) -> RangeInclusive<i64> {
    if enabled {
        n..=n
    } else {
        RangeInclusive::new(1, 0)
    }
}

impl PretzelWindows {
    pub fn acceptance() -> Self {
        Self { trace_forms: -6..=6, resultant: -8..=8, slice: -6..=12, witnesses: -4..=4 }
    }

    /// Every check over the same window, clipped to what each supports.
    pub fn uniform(lo: i64, hi: i64) -> Self {
        let clip = |b: i64| lo.max(-b)..=hi.min(b);
        Self {
            trace_forms: clip(DEFAULT_TRACE_BOUND),
            resultant: lo..=hi,
            slice: lo..=hi,
            witnesses: clip(WITNESS_BOUND),
        }
    }
}

pub fn trace_forms_report(n: i64) -> VerificationReport {
    let mut r = VerificationReport::new("TraceFormsMatch", format!("n={n}"));
    r.check("P_trace_equals_closed_form", p_trace() == p_closed());
    match q_trace_bounded(n, DEFAULT_TRACE_BOUND) {
        Ok(q) => {
            r.check("Q_n_trace_equals_closed_form", q == q_closed(n));
        }
        Err(e) => r.fail("Q_n_trace", e.to_string()),
    }
    r
}

type Job = Box<dyn Fn() -> Vec<VerificationReport> + Send + Sync>;

fn run_jobs(jobs: Vec<Job>) -> Vec<VerificationReport> {
    jobs.par_iter().flat_map_iter(|job| job()).collect()
}

pub fn pretzel_jobs(w: &PretzelWindows, tol: f64) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for n in w.trace_forms.clone() {
        jobs.push(Box::new(move || vec![trace_forms_report(n)]));
    }
    for n in w.resultant.clone() {
        jobs.push(Box::new(move || vec![resultant_report(n)]));
    }
    for n in w.slice.clone() {
        jobs.push(Box::new(move || vec![x0_slice_report(n, tol), seidenberg_check(n, tol)]));
    }
    for n in w.witnesses.clone() {
        jobs.push(Box::new(move || match witness_reports(n) {
            Ok(reports) => reports.into(),
            Err(e) => {
                let mut r = VerificationReport::new("Witness", format!("n={n}"));
                r.fail("range", e.to_string());
                vec![r]
            }
        }));
    }
    jobs
}

pub fn twobridge_jobs(p_max: u32) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for k in TwoBridgeKnot::all_up_to(p_max) {
        jobs.push(Box::new(move || match analyze(&k, k.p() <= LEADING_TERMS_P_MAX) {
            Ok(a) => a.reports,
            Err(e) => {
                let mut r = VerificationReport::new("TwoBridgeAnalysis", k.label());
                r.fail("error", e.to_string());
                vec![r]
            }
        }));
    }
    for p in (3..=p_max.min(IRREDUCIBILITY_P_MAX)).step_by(2) {
        jobs.push(Box::new(move || vec![irreducibility_report(p)]));
    }
    jobs
}

pub fn qtorus_jobs(seed: u64) -> Vec<Job> {
    vec![
        Box::new(move || algebra_reports(ALGEBRA_CASES, seed)),
        Box::new(|| unknot_demo(*UNKNOT_WINDOW.start(), *UNKNOT_WINDOW.end()).reports),
    ]
}

pub fn trace_jobs(tol: f64, seed: u64) -> Vec<Job> {
    vec![Box::new(move || vec![trace_oracle_report(ORACLE_WORDS, ORACLE_MAX_LEN, ORACLE_TRIALS, tol, seed)])]
}

pub fn run_suite(jobs: Vec<Job>) -> Vec<VerificationReport> {
    run_jobs(jobs)
}
