//! Character varieties of two-bridge knots.
//!
//! For `b(p, m)` the group is `⟨a, b | wa = bw⟩` with `w` read off the
//! signs `ε_j = (−1)^⌊jm/p⌋`. The non-abelian characters are cut out by
//! `Φ_(p,m)(x, z)`, an alternating sum of traces of `w` trimmed at both ends.
//! This module builds `Φ` with the trace engine and checks its structure:
//! the `x = 0` slice, Newton-polygon vertices of `Γ(X, z) = Φ(x, z)` with
//! `X = x²`, the leading terms of every trimmed trace, and irreducibility of
//! the torus-knot slice `Φ_d = S_d − S_{d−1}`.

mod factor;
mod knot;
mod phi;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::exactpoly::{MultiPoly, PolyError};
use crate::report::VerificationReport;

pub use factor::{factor_oracle, FactorError, MAX_DEGREE};
pub use knot::{epsilon_sequence, trimmed_word, word_letters, word_w, TwoBridgeKnot};
pub use phi::{
    check_newton_vertices, check_prop_lot, check_x_zero, gamma, gamma_from_phi, newton_report, phi, phi_from_traces,
    phi_torus, prop_lot_report, to_big_x, trimmed_traces,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TwoBridgeError {
    #[error("invalid two-bridge knot {0}")]
    InvalidKnot(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Irreducibility of `Φ_d(z)` over `Q`, `p = 2d + 1`: it holds exactly when
/// `p` is prime, because the roots `2cos((2j+1)π/p)` generate a field of
/// degree `φ(p)/2`.
pub fn phi_d_irreducible_over_q(p: u32) -> bool {
    is_prime(p)
}

/// Largest `d` for which the root-grouping oracle is consulted.
pub const ORACLE_MAX_D: u32 = 11;

/// Compares the primality verdict with an actual factorization of `Φ_d`.
pub fn irreducibility_report(p: u32) -> VerificationReport {
    let mut r = VerificationReport::new("IrreducibleOverQ", format!("p={p}"));
    let predicted = phi_d_irreducible_over_q(p);
    r.detail("p_prime", predicted);
    let d = (p - 1) / 2;
    if d > ORACLE_MAX_D {
        r.detail("oracle", "skipped");
        return r;
    }
    let f = phi_torus(d).drop_var("x").expect("phi_d does not involve x");
    match factor_oracle(&f, "z", d as usize) {
        Ok(factors) => {
            r.check("oracle_agrees", (factors.len() == 1) == predicted);
            let texts: Vec<String> = factors.iter().map(|q| format!("{q}")).collect();
            r.detail("factors", texts);
        }
        Err(e) => r.fail("oracle_error", format!("{e}")),
    }
    r
}

/// Verdict of the sufficient criterion for irreducibility over `C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexIrreducibility {
    Guaranteed,
    Unknown,
}

impl ComplexIrreducibility {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Guaranteed => "guaranteed-irreducible-over-C",
            Self::Unknown => "unknown",
        }
    }
}

/// `Guaranteed` when `p` is prime and `gcd(d, c) = 1`, read literally, so
/// `gcd(d, 0) = d` and torus knots with `d > 1` get `Unknown`. Never claims
/// reducibility.
pub fn complex_irreducibility_certificate(k: &TwoBridgeKnot) -> ComplexIrreducibility {
    if is_prime(k.p()) && k.d().gcd(&k.c()) == 1 {
        ComplexIrreducibility::Guaranteed
    } else {
        ComplexIrreducibility::Unknown
    }
}

/// Everything computed for one knot.
#[derive(Clone, Debug)]
pub struct TwoBridgeAnalysis {
    pub knot: TwoBridgeKnot,
    pub phi: MultiPoly,
    pub gamma: MultiPoly,
    pub reports: Vec<VerificationReport>,
    pub certificate: ComplexIrreducibility,
}

/// Builds `Φ` and `Γ` once and derives every structural report from them.
/// The leading-term check runs only when `with_leading_terms` is set, since
/// it is the bulk of the cost for large `p`.
pub fn analyze(k: &TwoBridgeKnot, with_leading_terms: bool) -> Result<TwoBridgeAnalysis, TwoBridgeError> {
    let traces = trimmed_traces(k);
    let phi = phi_from_traces(k, &traces)?;
    let gamma = gamma_from_phi(k, &phi)?;
    let mut reports = alloc::vec![check_x_zero(k, &phi), newton_report(k, &gamma)];
    if with_leading_terms {
        reports.push(prop_lot_report(k, &traces));
    }
    Ok(TwoBridgeAnalysis { knot: *k, certificate: complex_irreducibility_certificate(k), phi, gamma, reports })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_verdicts() {
        assert!(phi_d_irreducible_over_q(7));
        assert!(!phi_d_irreducible_over_q(9));
        assert!(!phi_d_irreducible_over_q(25));
    }

    #[test]
    fn oracle_agrees_for_small_p() {
        for p in [3, 5, 7, 9, 15, 21] {
            assert!(irreducibility_report(p).passed(), "p={p}");
        }
    }

    #[test]
    fn p25_splits() {
        let f = phi_torus(12).drop_var("x").unwrap();
        let factors = factor_oracle(&f, "z", 12).unwrap();
        assert!(factors.len() > 1);
    }

    #[test]
    fn certificate_cases() {
        let k = |p, m| TwoBridgeKnot::new(p, m).unwrap();
        use ComplexIrreducibility::*;
        assert_eq!(complex_irreducibility_certificate(&k(7, 3)), Guaranteed);
        assert_eq!(complex_irreducibility_certificate(&k(9, 5)), Unknown);
        assert_eq!(complex_irreducibility_certificate(&k(13, 5)), Unknown);
        assert_eq!(complex_irreducibility_certificate(&k(3, 1)), Guaranteed);
        assert_eq!(complex_irreducibility_certificate(&k(7, 1)), Unknown);
    }
}
