//! Acceptance run: one line per criterion, each with its own tolerance and
//! time budget. The test fails if any criterion fails, after all have run.

use std::time::{Duration, Instant};

use charvar_core::exactpoly::MultiPoly;
use charvar_core::pretzel::{
    p_closed, p_trace, q_closed, q_trace, resultant, resultant_report, witness_reports, x0_slice,
};
use charvar_core::qtorus::{algebra_reports, unknot_demo, SigmaOrdering};
use charvar_core::sl2trace::trace_oracle_report;
use charvar_core::twobridge::{analyze, irreducibility_report, TwoBridgeKnot};
use charvar_core::{Detail, RationalFunction};

const SEED: u64 = 0x5eed_2b1d;
const ROOT_TOL: f64 = 1e-9;
const ORACLE_TOL: f64 = 1e-8;

struct Outcome {
    ok: bool,
    note: String,
}

fn outcome(failures: Vec<String>, checked: usize) -> Outcome {
    Outcome {
        ok: failures.is_empty(),
        note: if failures.is_empty() {
            format!("{checked} checks")
        } else {
            format!("{} of {checked} failed: {}", failures.len(), failures.join("; "))
        },
    }
}

fn criterion(id: u32, title: &str, budget: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    let in_time = elapsed <= budget;
    let ok = out.ok && in_time;
    println!(
        "criterion {id} [{}] {title}: {} ({:.2?} of {:?}{})",
        if ok { "PASS" } else { "FAIL" },
        out.note,
        elapsed,
        budget,
        if in_time { "" } else { ", over budget" },
    );
    ok
}

fn closed_vs_traces() -> Outcome {
    let mut bad = Vec::new();
    if p_trace() != p_closed() {
        bad.push("P".to_string());
    }
    for n in -6..=6 {
        if q_trace(n).ok() != Some(q_closed(n)) {
            bad.push(format!("Q_{n}"));
        }
    }
    outcome(bad, 14)
}

fn resultant_structure() -> Outcome {
    let mut bad = Vec::new();
    for n in -8..=8i64 {
        let res = resultant(n);
        let deg = res.degree_in("y").unwrap();
        if !res.leading_coeff_in("y").unwrap().is_one() {
            bad.push(format!("n={n}: leading coefficient"));
        }
        let expect = if n >= 4 {
            Some(3 * n as i32 - 2)
        } else if n <= -5 {
            Some(1 - 3 * n as i32)
        } else {
            None
        };
        if expect.is_some() && deg != expect {
            bad.push(format!("n={n}: degree {deg:?}, expected {expect:?}"));
        }
        if (-5..=8).contains(&n) {
            let r = resultant_report(n);
            if r.get("closed_form_identity") != Some(&Detail::Bool(true)) {
                bad.push(format!("n={n}: T-identity"));
            }
        }
    }
    outcome(bad, 17 + 9 + 14)
}

fn x0_radicality() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in -6..=12i64 {
        let d = x0_slice(n);
        count += 1;
        if !d.identity_ok {
            bad.push(format!("n={n}: identity"));
        }
        if n >= 3 || n <= -1 {
            count += 1;
            if !d.squarefree_ok {
                bad.push(format!("n={n}: a_n U_n not square-free"));
            }
        }
        if let Some((ru, ra)) = d.root_residuals {
            count += 1;
            if !(ru < ROOT_TOL && ra < ROOT_TOL) {
                bad.push(format!("n={n}: residuals {ru:e}, {ra:e}"));
            }
        }
    }
    outcome(bad, count)
}

fn witnesses() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in -4..=4 {
        for r in witness_reports(n).expect("|n| <= 4 is in range") {
            count += r.details.len();
            for (k, d) in &r.details {
                if *d == Detail::Bool(false) {
                    bad.push(format!("{} n={n}: {k}", r.claim_id));
                }
            }
            if !r.passed() && bad.is_empty() {
                bad.push(format!("{} n={n}", r.claim_id));
            }
        }
    }
    outcome(bad, count)
}

fn two_bridge_suite() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for k in TwoBridgeKnot::all_up_to(45) {
        match analyze(&k, k.p() <= 31) {
            Ok(a) => {
                for r in &a.reports {
                    count += 1;
                    if !r.passed() {
                        bad.push(format!("{} {}", r.claim_id, k.label()));
                    }
                }
            }
            Err(e) => bad.push(format!("{}: {e}", k.label())),
        }
    }
    outcome(bad, count)
}

fn irreducibility() -> Outcome {
    let bad: Vec<String> = (3..=23u32)
        .step_by(2)
        .filter(|&p| {
            let r = irreducibility_report(p);
            !(r.passed() && r.get("oracle_agrees") == Some(&Detail::Bool(true)))
        })
        .map(|p| format!("p={p}"))
        .collect();
    outcome(bad, 11)
}

fn quantum_torus() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for r in algebra_reports(200, SEED) {
        count += 1;
        if !r.passed() {
            bad.push(r.claim_id.clone());
        }
    }
    let demo = unknot_demo(-20, 20);
    for r in &demo.reports {
        count += 1;
        if !r.passed() {
            bad.push(r.claim_id.clone());
        }
    }
    count += 1;
    let m2 = MultiPoly::parse(&["M", "L"], "M^2 - 1").unwrap();
    if demo.quotient_by_l_minus_1.as_ref() != Some(&m2) || !demo.m_only {
        bad.push("epsilon(alpha)/(L - 1) != M^2 - 1".into());
    }
    count += 1;
    let want = RationalFunction::from_poly(MultiPoly::parse(&["t", "M"], "t^2*M^2").unwrap());
    match charvar_core::qtorus::sigma_symmetry_factor(&demo.alpha) {
        Some(f) if f.ordering == SigmaOrdering::LdLeft && f.h == want => {}
        other => bad.push(format!("sigma factor {:?}", other.map(|f| (f.ordering, f.h.to_string())))),
    }
    outcome(bad, count)
}

fn trace_oracle() -> Outcome {
    let r = trace_oracle_report(500, 12, 20, ORACLE_TOL, SEED);
    let err = match r.get("max_relative_error") {
        Some(Detail::Float(e)) => *e,
        _ => f64::NAN,
    };
    Outcome {
        ok: r.passed(),
        note: format!("500 words x 20 samples, worst scaled error {err:.2e} (tol {ORACLE_TOL:e})"),
    }
}

#[test]
fn acceptance() {
    let s = Duration::from_secs;
    let results = [
        criterion(1, "closed forms equal trace forms, n in [-6, 6]", s(5), closed_vs_traces),
        criterion(2, "resultant degree, leading coefficient, T-identity", s(60), resultant_structure),
        criterion(3, "x = 0 identity, square-freeness, cosine roots", s(10), x0_radicality),
        criterion(4, "matrix witnesses, n in [-4, 4]", s(10), witnesses),
        criterion(5, "two-bridge suite, p <= 45", s(120), two_bridge_suite),
        criterion(6, "irreducibility verdict vs factor oracle, p <= 23", s(30), irreducibility),
        criterion(7, "quantum torus algebra and unknot recurrence", s(5), quantum_torus),
        criterion(8, "trace engine vs random matrices", s(20), trace_oracle),
    ];
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, ok)| !**ok).map(|(i, _)| i + 1).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
