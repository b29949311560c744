//! Random-matrix check of trace polynomials.
//!
//! Each trial draws `A, B ∈ SL2(C)` with entries whose real and imaginary
//! parts are uniform in `[−1, 1]`; the bottom-right entry is then solved for
//! so that the determinant is exactly one (up to rounding). Samples whose
//! top-left entry is below `1e-6` in modulus are redrawn.
//!
//! The comparison is `|numeric − polynomial| < tol · scale` with
//! `scale = max(1, |numeric|, Σ |c|·|x|^i |y|^j |z|^k)`. The last term is
//! the size of the polynomial evaluation before cancellation, which bounds
//! its rounding error; without it a long word evaluated at a sample with a
//! small pivot loses more digits than any fixed tolerance allows.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::exactpoly::{eval_complex, MultiPoly};
use crate::report::VerificationReport;

use super::fold::trace_poly;
use super::word::{FreeWord, Generator};

type Mat = [[Complex64; 2]; 2];

const PIVOT_FLOOR: f64 = 1e-6;

fn uniform(rng: &mut ChaCha8Rng) -> f64 {
    // 53 random bits mapped to [−1, 1).
    let u = (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
    2.0 * u - 1.0
}

fn complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(uniform(rng), uniform(rng))
}

/// A random unimodular complex 2x2 matrix.
pub fn random_sl2(rng: &mut ChaCha8Rng) -> Mat {
    loop {
        let a = complex(rng);
        let b = complex(rng);
        let c = complex(rng);
        if a.norm() < PIVOT_FLOOR {
            continue;
        }
        let d = (Complex64::new(1.0, 0.0) + b * c) / a;
        return [[a, b], [c, d]];
    }
}

fn mat_mul(p: &Mat, q: &Mat) -> Mat {
    [
        [p[0][0] * q[0][0] + p[0][1] * q[1][0], p[0][0] * q[0][1] + p[0][1] * q[1][1]],
        [p[1][0] * q[0][0] + p[1][1] * q[1][0], p[1][0] * q[0][1] + p[1][1] * q[1][1]],
    ]
}

fn inverse(m: &Mat) -> Mat {
    [[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]]
}

/// Numeric trace of the word with `a ↦ A`, `b ↦ B`.
pub fn numeric_trace(word: &FreeWord, a: &Mat, b: &Mat) -> Complex64 {
    let (ai, bi) = (inverse(a), inverse(b));
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let mut acc: Mat = [[one, zero], [zero, one]];
    for (g, s) in word.letters() {
        let m = match (g, s > 0) {
            (Generator::First, true) => a,
            (Generator::First, false) => &ai,
            (Generator::Second, true) => b,
            (Generator::Second, false) => &bi,
        };
        acc = mat_mul(&acc, m);
    }
    acc[0][0] + acc[1][1]
}

/// `Σ |c| x^i y^j z^k` for the terms `c x^i y^j z^k` of a polynomial in
/// `x, y, z` (negative exponents count as powers of the reciprocal).
fn magnitude(poly: &MultiPoly, x: f64, y: f64, z: f64) -> f64 {
    let vals = [x, y, z];
    let idx: Vec<Option<usize>> = poly.vars().iter().map(|v| ["x", "y", "z"].iter().position(|n| n == v)).collect();
    poly.terms()
        .map(|(e, c)| {
            let mut m = num_traits::ToPrimitive::to_f64(&num_traits::Signed::abs(c)).unwrap_or(f64::INFINITY);
            for (k, &exp) in e.iter().enumerate() {
                if let Some(i) = idx[k] {
                    m *= libm::pow(vals[i], exp as f64);
                }
            }
            m
        })
        .sum()
}

/// Largest scaled discrepancy between `poly` (in `x, y, z`) and the numeric
/// trace of `word` over `trials` random pairs.
pub fn max_trace_error(word: &FreeWord, poly: &MultiPoly, trials: usize, rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let a = random_sl2(rng);
        let b = random_sl2(rng);
        let x = a[0][0] + a[1][1];
        let y = b[0][0] + b[1][1];
        let ab = mat_mul(&a, &b);
        let z = ab[0][0] + ab[1][1];
        let numeric = numeric_trace(word, &a, &b);
        let symbolic = match eval_complex(poly, &[("x", x), ("y", y), ("z", z)]) {
            Ok(v) => v,
            Err(_) => return f64::INFINITY,
        };
        let scale = numeric.norm().max(1.0).max(magnitude(poly, x.norm(), y.norm(), z.norm()));
        let err = (numeric - symbolic).norm() / scale;
        worst = worst.max(if err.is_nan() { f64::INFINITY } else { err });
    }
    worst
}

/// Checks an explicit candidate polynomial against random matrices.
pub fn check_trace_numerically(word: &FreeWord, poly: &MultiPoly, trials: usize, tol: f64, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    max_trace_error(word, poly, trials, &mut rng) < tol
}

/// `true` iff `trace_poly(word)` matches the numeric trace in every trial.
pub fn numeric_trace_oracle(word: &FreeWord, trials: usize, tol: f64, seed: u64) -> bool {
    check_trace_numerically(word, &trace_poly(word), trials.max(1), tol, seed)
}

/// A uniformly random reduced-or-not word of length `1..=max_len` over
/// `a^±1, b^±1`; free reduction happens on construction.
pub fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> FreeWord {
    let len = 1 + (rng.next_u32() as usize) % max_len.max(1);
    let letters = (0..len).map(|_| {
        let r = rng.next_u32();
        let g = if r & 1 == 0 { Generator::First } else { Generator::Second };
        (g, if r & 2 == 0 { 1 } else { -1 })
    });
    FreeWord::new(letters)
}

/// `words` random words of length at most `max_len`, each compared with
/// `trials` random matrix pairs.
pub fn trace_oracle_report(words: usize, max_len: usize, trials: usize, tol: f64, seed: u64) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = VerificationReport::new("TraceOracle", format!("{words} words, length <= {max_len}"));
    let mut worst: f64 = 0.0;
    let mut first_bad: Option<String> = None;
    for _ in 0..words {
        let w = random_word(&mut rng, max_len);
        let err = max_trace_error(&w, &trace_poly(&w), trials, &mut rng);
        if (err.is_nan() || err >= tol) && first_bad.is_none() {
            first_bad = Some(format!("{w}"));
        }
        worst = worst.max(err);
    }
    r.detail("seed", seed as i64);
    r.detail("trials_per_word", trials);
    r.detail("max_relative_error", worst);
    if let Some(w) = first_bad {
        r.detail("first_mismatch", w);
    }
    r.numeric_check("within_tolerance", worst < tol);
    r
}
