//! Command-line front end for `charvar-core`.
//!
//! Every subcommand produces a list of verification reports; `--json` turns
//! them into a single document `{tool_version, subject, data, reports}` with
//! polynomials in canonical text form. The exit code is 0 when every report
//! passes, 1 when any fails and 2 for usage errors.

pub mod args;
pub mod output;
pub mod suite;

use std::ffi::OsString;
use std::io::Write;

use charvar_core::pretzel::{p_closed, q_closed, resultant, x0_slice};
use charvar_core::qtorus::{sigma_symmetry_factor, unknot_demo};
use charvar_core::sl2trace::{check_trace_numerically, trace_poly};
use charvar_core::twobridge::{analyze, irreducibility_report, TwoBridgeKnot};
use charvar_core::{FreeWord, VerificationReport};
use clap::Parser;
use serde_json::{json, Value};

use args::{Cli, Command, Common, QtorusDemo, Suite};
use output::{document, render_json, render_table, sort_reports};
use suite::{PretzelWindows, WITNESS_BOUND};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// What a subcommand hands back for printing.
struct Outcome {
    subject: String,
    data: Option<Value>,
    reports: Vec<VerificationReport>,
    /// Printed before the table in human mode.
    headline: Option<String>,
}

struct UsageError(String);

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let outcome = match dispatch(&cli.command, &cli.common) {
        Ok(o) => o,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
    };
    let mut reports = outcome.reports;
    sort_reports(&mut reports);
    let text = if cli.common.json {
        render_json(&document(&outcome.subject, outcome.data, &reports))
    } else {
        let mut t = String::new();
        if let Some(h) = outcome.headline {
            t.push_str(&h);
            t.push('\n');
        }
        t.push_str(&render_table(&outcome.subject, &reports));
        t
    };
    let mut stdout = std::io::stdout().lock();
    let _ = writeln!(stdout, "{}", text.trim_end());
    if reports.iter().all(VerificationReport::passed) {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn dispatch(cmd: &Command, common: &Common) -> Result<Outcome, UsageError> {
    match cmd {
        Command::Twobridge { p, m, no_leading_terms } => twobridge(*p, *m, !no_leading_terms),
        Command::Pretzel { n } => Ok(pretzel(*n, common.tol)),
        Command::Qtorus { demo: QtorusDemo::DemoUnknot { range } } => {
            let (lo, hi) = pair(range.as_deref(), (-20, 20))?;
            Ok(demo_unknot(lo, hi))
        }
        Command::Trace { word } => trace(word, common),
        Command::Verify { suite, n_range, p_max } => {
            let windows = match n_range.as_deref() {
                Some(r) => {
                    let (lo, hi) = pair(Some(r), (0, 0))?;
                    PretzelWindows::uniform(lo, hi)
                }
                None => PretzelWindows::acceptance(),
            };
            Ok(verify(*suite, &windows, *p_max, common))
        }
    }
}

fn pair(values: Option<&[i64]>, default: (i64, i64)) -> Result<(i64, i64), UsageError> {
    match values {
        None => Ok(default),
        Some([a, b]) if a <= b => Ok((*a, *b)),
        Some([a, b]) => Err(UsageError(format!("empty range [{a}, {b}]"))),
        Some(_) => Err(UsageError("a range needs exactly two integers".into())),
    }
}

fn twobridge(p: u32, m: u32, leading_terms: bool) -> Result<Outcome, UsageError> {
    let k = TwoBridgeKnot::new(p, m).map_err(|e| UsageError(e.to_string()))?;
    let a = analyze(&k, leading_terms).map_err(|e| UsageError(e.to_string()))?;
    let mut reports = a.reports.clone();
    reports.push(irreducibility_report(p));
    let data = json!({
        "p": p,
        "m": m,
        "d": k.d(),
        "c": k.c(),
        "phi": a.phi.to_string(),
        "gamma": a.gamma.to_string(),
        "irreducibility_over_C": a.certificate.as_str(),
    });
    let headline = format!("Phi = {}\nirreducibility over C: {}", a.phi, a.certificate.as_str());
    Ok(Outcome { subject: k.label(), data: Some(data), reports, headline: Some(headline) })
}

fn pretzel(n: i64, tol: f64) -> Outcome {
    let windows = PretzelWindows {
        trace_forms: suite::single(n, n.abs() <= charvar_core::pretzel::DEFAULT_TRACE_BOUND),
        resultant: n..=n,
        slice: n..=n,
        witnesses: suite::single(n, n.abs() <= WITNESS_BOUND),
    };
    let reports = suite::run_suite(suite::pretzel_jobs(&windows, tol));
    let res = resultant(n);
    let slice = x0_slice(n);
    let data = json!({
        "n": n,
        "P": p_closed().to_string(),
        "Q_n": q_closed(n).to_string(),
        "resultant": {
            "polynomial": res.to_string(),
            "y_degree": res.degree_in("y").ok().flatten(),
        },
        "x0_slice": {
            "a_n": slice.a_n.to_string(),
            "b_n": slice.b_n.to_string(),
            "U_n": slice.u_n.to_string(),
        },
        "witnesses": if n.abs() <= WITNESS_BOUND { "checked" } else { "skipped: |n| > 6" },
    });
    let headline = format!("P = {}\nQ_n = {}", p_closed(), q_closed(n));
    Outcome { subject: format!("pretzel(-2,3,{})", 2 * n + 1), data: Some(data), reports, headline: Some(headline) }
}

fn demo_unknot(lo: i64, hi: i64) -> Outcome {
    let d = unknot_demo(lo, hi);
    let sigma = sigma_symmetry_factor(&d.alpha)
        .map(|f| json!({"h": f.h.to_string(), "ordering": f.ordering.as_str(), "m_only": f.m_only}));
    let annihilation = d.reports.iter().find(|r| r.claim_id == "Annihilation").map(|r| r.status.as_str());
    let data = json!({
        "alpha": d.alpha.to_string(),
        "annihilation": annihilation,
        "epsilon_alpha": d.epsilon_alpha.to_string(),
        "aj_unknot": {
            "quotient_by_L_minus_1": d.quotient_by_l_minus_1.as_ref().map(ToString::to_string),
            "M_only": d.m_only,
        },
        "sigma_factor": sigma,
    });
    let headline = format!("alpha = {}\nepsilon(alpha) = {}", d.alpha, d.epsilon_alpha);
    Outcome { subject: "unknot".into(), data: Some(data), reports: d.reports, headline: Some(headline) }
}

fn trace(word: &str, common: &Common) -> Result<Outcome, UsageError> {
    let w = FreeWord::parse(word, ["a", "b"]).map_err(|e| UsageError(e.to_string()))?;
    let poly = trace_poly(&w);
    let ok = check_trace_numerically(&w, &poly, suite::ORACLE_TRIALS, common.tol, common.seed);
    let mut r = VerificationReport::new("TraceOracle", w.to_string());
    r.numeric_check("matches_random_matrices", ok);
    let data = json!({"word": w.to_string(), "trace": poly.to_string()});
    Ok(Outcome { subject: w.to_string(), data: Some(data), reports: vec![r], headline: Some(poly.to_string()) })
}

fn verify(which: Suite, windows: &PretzelWindows, p_max: u32, common: &Common) -> Outcome {
    let mut jobs = Vec::new();
    if matches!(which, Suite::All | Suite::Trace) {
        jobs.extend(suite::trace_jobs(common.tol, common.seed));
    }
    if matches!(which, Suite::All | Suite::Pretzel) {
        jobs.extend(suite::pretzel_jobs(windows, common.tol));
    }
    if matches!(which, Suite::All | Suite::Twobridge) {
        jobs.extend(suite::twobridge_jobs(p_max));
    }
    if matches!(which, Suite::All | Suite::Qtorus) {
        jobs.extend(suite::qtorus_jobs(common.seed));
    }
    let name = format!("{which:?}").to_lowercase();
    Outcome { subject: format!("suite {name}"), data: None, reports: suite::run_suite(jobs), headline: None }
}
