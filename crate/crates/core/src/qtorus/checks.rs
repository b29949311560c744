//! Randomized algebra checks and the unknot demonstration, as reports.

use alloc::format;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::exactpoly::{rat, MultiPoly};
use crate::report::VerificationReport;

use super::action::{act, alpha_unknot, annihilation_check, apply, jones_unknot_seq, t_poly, DiscreteSeq};
use super::coeff::TM;
use super::elem::{upsilon, QTElem, ML};
use super::symmetry::sigma_symmetry_factor;

fn small(rng: &mut ChaCha8Rng, lo: i32, hi: i32) -> i32 {
    lo + (rng.next_u32() % (hi - lo + 1) as u32) as i32
}

/// Up to four terms `c t^a M^b L^j` with `|c| ≤ 3`, `|a|, |b| ≤ 2`, and
/// `j ∈ [−3, 3]`.
pub fn random_element(rng: &mut ChaCha8Rng) -> QTElem<MultiPoly> {
    let n = small(rng, 1, 4);
    QTElem::from_terms((0..n).map(|_| {
        let c = small(rng, -3, 3);
        let exp = alloc::vec![small(rng, -2, 2), small(rng, -2, 2)];
        let coeff = MultiPoly::from_terms(&TM, &TM, [(exp, rat(c as i64))]).expect("Laurent");
        (small(rng, -3, 3), coeff)
    }))
}

fn random_seq(rng: &mut ChaCha8Rng) -> DiscreteSeq<'static> {
    let (a, b, c) = (small(rng, -3, 3) as i64, small(rng, 1, 3), small(rng, -2, 2) as i64);
    DiscreteSeq::new(move |n| t_poly(&[(b * n as i32, a), (-1, c * n), (0, 1)]))
}

/// Associativity, σ as an involutive automorphism, ε multiplicative, and
/// compatibility of the action with multiplication, on `cases` random
/// inputs each; plus σ-invariance of the curve images for `|k|, |l| ≤ 5`.
pub fn algebra_reports(cases: usize, seed: u64) -> Vec<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let subject = format!("{cases} random cases, seed {seed}");
    let assoc = VerificationReport::new("QTAssociativity", subject.clone());
    let sigma_hom = VerificationReport::new("SigmaAutomorphism", subject.clone());
    let sigma_inv = VerificationReport::new("SigmaInvolution", subject.clone());
    let eps = VerificationReport::new("EpsilonMultiplicative", subject.clone());
    let action = VerificationReport::new("ActionCompatibility", subject.clone());
    let mut fails = [0usize; 5];
    for _ in 0..cases {
        let p = random_element(&mut rng);
        let q = random_element(&mut rng);
        let r = random_element(&mut rng);
        if &(&p * &q) * &r != &p * &(&q * &r) {
            fails[0] += 1;
        }
        let pq = &p * &q;
        if pq.sigma() != &p.sigma() * &q.sigma() {
            fails[1] += 1;
        }
        if p.sigma().sigma() != p {
            fails[2] += 1;
        }
        if pq.epsilon() != &p.epsilon() * &q.epsilon() {
            fails[3] += 1;
        }
        let f = random_seq(&mut rng);
        let n = small(&mut rng, -5, 5) as i64;
        let qf = apply(&q, &f);
        if act(&pq, &f, n) != act(&p, &qf, n) {
            fails[4] += 1;
        }
    }
    let mut out = Vec::new();
    for (mut rep, bad) in [assoc, sigma_hom, sigma_inv, eps, action].into_iter().zip(fails) {
        rep.detail("failures", bad);
        rep.check("all_cases_hold", bad == 0);
        out.push(rep);
    }
    let mut ups = VerificationReport::new("UpsilonSigmaInvariant", "|k|, |l| <= 5");
    let bad: Vec<(i32, i32)> = (-5..=5)
        .flat_map(|k| (-5..=5).map(move |l| (k, l)))
        .filter(|&(k, l)| upsilon(k, l).sigma() != upsilon(k, l))
        .collect();
    ups.detail("failures", bad.len());
    ups.check("all_invariant", bad.is_empty());
    out.push(ups);
    out
}

/// The pieces of the unknot demonstration.
pub struct UnknotDemo {
    pub alpha: QTElem<MultiPoly>,
    pub epsilon_alpha: MultiPoly,
    pub quotient_by_l_minus_1: Option<MultiPoly>,
    pub m_only: bool,
    pub reports: Vec<VerificationReport>,
}

pub fn unknot_demo(lo: i64, hi: i64) -> UnknotDemo {
    let alpha = alpha_unknot();
    let jones = jones_unknot_seq();
    let mut reports = alloc::vec![annihilation_check(&alpha, &jones, lo..=hi)];

    let epsilon_alpha = alpha.epsilon();
    let l_minus_1 = MultiPoly::parse(&ML, "L - 1").expect("literal");
    let quotient = epsilon_alpha.div_exact(&l_minus_1);
    let m_only = quotient.as_ref().is_some_and(|q| q.terms().all(|(e, _)| e[1] == 0));
    let mut aj = VerificationReport::new("LMinusOneDivides", "unknot");
    aj.check("divisible_by_L_minus_1", quotient.is_some());
    aj.check("quotient_M_only", m_only);
    if let Some(q) = &quotient {
        aj.check("quotient_is_M2_minus_1", *q == MultiPoly::parse(&ML, "M^2 - 1").expect("literal"));
    }
    reports.push(aj);

    let mut sym = VerificationReport::new("SigmaSymmetry", "unknot");
    match sigma_symmetry_factor(&alpha) {
        Some(f) => {
            sym.detail("ordering", f.ordering.as_str());
            sym.detail("h", format!("{}", f.h));
            sym.detail("h_m_only", f.m_only);
            sym.check("factor_found", true);
        }
        None => sym.fail("factor_found", "no consistent h in either ordering"),
    }
    reports.push(sym);

    UnknotDemo { alpha, epsilon_alpha, quotient_by_l_minus_1: quotient, m_only, reports }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_properties_hold() {
        for r in algebra_reports(40, 11) {
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn demo_passes() {
        let d = unknot_demo(-20, 20);
        assert!(d.m_only);
        assert!(d.reports.iter().all(|r| r.passed()));
    }
}
