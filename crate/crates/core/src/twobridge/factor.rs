//! Factorization of monic integer polynomials by numerical root grouping.
//!
//! The roots are approximated in double precision (Aberth), refined by
//! Newton's method in binary fixed point, and then grouped: a subset of roots
//! whose elementary symmetric functions are all within `1e-20` of integers
//! yields a candidate factor, which is accepted only after exact polynomial
//! division. Exact division makes a wrong factor impossible; the numerics
//! only affect whether a factor is found.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};

use crate::exactpoly::numeric::{roots, univariate_coeffs};
use crate::exactpoly::{MultiPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FactorError {
    #[error("input must be a non-constant univariate polynomial")]
    NotUnivariate,
    #[error("input must be monic with integer coefficients")]
    NotMonicInteger,
    #[error("degree {0} exceeds the supported maximum of {MAX_DEGREE}")]
    DegreeTooLarge(usize),
    #[error("root refinement did not converge")]
    NoConvergence,
}

pub const MAX_DEGREE: usize = 24;

/// Fixed-point precisions tried in turn, in bits (224 bits ≈ 67 digits).
const PRECISIONS: [u32; 2] = [224, 448];

/// `|frac| < 2^-66 ≈ 1.4e-20` is the integrality window.
const WINDOW_BITS: u32 = 66;

#[derive(Clone, Debug, PartialEq)]
struct Fixed {
    re: BigInt,
    im: BigInt,
}

struct Ctx {
    bits: u32,
}

impl Ctx {
    fn to_fixed(&self, v: f64) -> BigInt {
        if v == 0.0 {
            return BigInt::zero();
        }
        let (mant, exp, sign) = v.integer_decode();
        let m = BigInt::from(mant) * i64::from(sign);
        let shift = i64::from(exp) + i64::from(self.bits);
        if shift >= 0 {
            m << shift as usize
        } else {
            m >> (-shift) as usize
        }
    }

    fn to_f64(&self, v: &BigInt) -> f64 {
        let shift = v.bits().saturating_sub(60);
        let top = (v >> shift as usize).to_f64().unwrap_or(f64::NAN);
        top * libm::exp2(shift as f64 - f64::from(self.bits))
    }

    fn mul(&self, a: &Fixed, b: &Fixed) -> Fixed {
        Fixed {
            re: (&a.re * &b.re - &a.im * &b.im) >> self.bits as usize,
            im: (&a.re * &b.im + &a.im * &b.re) >> self.bits as usize,
        }
    }

    fn div(&self, a: &Fixed, b: &Fixed) -> Option<Fixed> {
        let den = (&b.re * &b.re + &b.im * &b.im) >> self.bits as usize;
        if den.is_zero() {
            return None;
        }
        let re = (&a.re * &b.re + &a.im * &b.im) >> self.bits as usize;
        let im = (&a.im * &b.re - &a.re * &b.im) >> self.bits as usize;
        Some(Fixed { re: (re << self.bits as usize) / &den, im: (im << self.bits as usize) / &den })
    }

    fn int(&self, c: &BigInt) -> Fixed {
        Fixed { re: c << self.bits as usize, im: BigInt::zero() }
    }

    /// `f(z)` and `f'(z)` for integer coefficients, lowest degree first.
    fn eval(&self, coeffs: &[BigInt], z: &Fixed) -> (Fixed, Fixed) {
        let mut val = Fixed { re: BigInt::zero(), im: BigInt::zero() };
        let mut der = val.clone();
        for c in coeffs.iter().rev() {
            der = self.mul(&der, z);
            der.re += &val.re;
            der.im += &val.im;
            val = self.mul(&val, z);
            val.re += c << self.bits as usize;
        }
        (val, der)
    }

    fn refine(&self, coeffs: &[BigInt], seed: Complex64) -> Option<Fixed> {
        let mut z = Fixed { re: self.to_fixed(seed.re), im: self.to_fixed(seed.im) };
        let tiny = BigInt::one() << (WINDOW_BITS as usize + 16);
        for _ in 0..64 {
            let (f, df) = self.eval(coeffs, &z);
            let step = self.div(&f, &df)?;
            z.re -= &step.re;
            z.im -= &step.im;
            if step.re.abs() < tiny && step.im.abs() < tiny {
                return Some(z);
            }
        }
        None
    }

    /// Coefficients (lowest first) of `∏ (t − r)` over the given roots.
    fn product(&self, roots: &[&Fixed]) -> Vec<Fixed> {
        let zero = Fixed { re: BigInt::zero(), im: BigInt::zero() };
        let mut out = vec![self.int(&BigInt::one())];
        for r in roots {
            let mut next = vec![zero.clone(); out.len() + 1];
            for (i, c) in out.iter().enumerate() {
                next[i + 1].re += &c.re;
                next[i + 1].im += &c.im;
                let rc = self.mul(c, r);
                next[i].re -= &rc.re;
                next[i].im -= &rc.im;
            }
            out = next;
        }
        out
    }

    /// The nearest integer if `v` is within the integrality window of one.
    fn near_integer(&self, v: &Fixed) -> Option<BigInt> {
        let window = BigInt::one() << (self.bits - WINDOW_BITS) as usize;
        if v.im.abs() >= window {
            return None;
        }
        let half = BigInt::one() << (self.bits - 1) as usize;
        let n = (&v.re + &half) >> self.bits as usize;
        let diff = &v.re - (&n << self.bits as usize);
        (diff.abs() < window).then_some(n)
    }
}

fn integer_coeffs(f: &MultiPoly, var: &str) -> Result<Vec<BigInt>, FactorError> {
    let i = f.index_of(var).map_err(|_| FactorError::NotUnivariate)?;
    let deg = f.degree_in(var).ok().flatten().filter(|d| *d >= 1).ok_or(FactorError::NotUnivariate)? as usize;
    let mut out = vec![BigInt::zero(); deg + 1];
    for (e, c) in f.terms() {
        if e.iter().enumerate().any(|(j, k)| j != i && *k != 0) || e[i] < 0 {
            return Err(FactorError::NotUnivariate);
        }
        if !c.is_integer() {
            return Err(FactorError::NotMonicInteger);
        }
        out[e[i] as usize] = c.to_integer();
    }
    if !out[deg].is_one() {
        return Err(FactorError::NotMonicInteger);
    }
    Ok(out)
}

fn poly_from_coeffs(like: &MultiPoly, var: &str, coeffs: &[BigInt]) -> MultiPoly {
    let i = like.index_of(var).expect("variable present");
    let mut out = like.zero_like();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut e = vec![0; like.vars().len()];
        e[i] = k as i32;
        out = &out + &like.monomial_like(e, Rational::from_integer(c.clone())).expect("valid");
    }
    out
}

/// Quick double-precision screen of a root subset.
fn plausible(roots: &[Complex64]) -> bool {
    let mut c = vec![Complex64::new(1.0, 0.0)];
    for r in roots {
        let mut next = vec![Complex64::new(0.0, 0.0); c.len() + 1];
        for (i, v) in c.iter().enumerate() {
            next[i + 1] += v;
            next[i] -= v * r;
        }
        c = next;
    }
    c.iter().all(|v| {
        let tol = 1e-6 * (1.0 + v.norm());
        v.im.abs() < tol && (v.re - v.re.round()).abs() < tol
    })
}

/// Searches for a factor made of `size` of the given roots, visiting subsets
/// in lexicographic order of indices.
fn find_factor(
    ctx: &Ctx,
    f: &MultiPoly,
    var: &str,
    approx: &[Complex64],
    precise: &[Fixed],
    size: usize,
) -> Option<(MultiPoly, Vec<usize>)> {
    let n = approx.len();
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let chosen: Vec<Complex64> = idx.iter().map(|&i| approx[i]).collect();
        if plausible(&chosen) {
            let refs: Vec<&Fixed> = idx.iter().map(|&i| &precise[i]).collect();
            let coeffs: Option<Vec<BigInt>> = ctx.product(&refs).iter().map(|c| ctx.near_integer(c)).collect();
            if let Some(coeffs) = coeffs {
                let cand = poly_from_coeffs(f, var, &coeffs);
                if f.div_exact(&cand).is_some() {
                    return Some((cand, idx));
                }
            }
        }
        // Next combination.
        let mut i = size;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] != i + n - size {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn factor_squarefree(f: &MultiPoly, var: &str, max_subset: usize) -> Result<Vec<MultiPoly>, FactorError> {
    let coeffs = integer_coeffs(f, var)?;
    if coeffs.len() == 2 {
        return Ok(vec![f.clone()]);
    }
    let float_coeffs = univariate_coeffs(f, var).map_err(|_| FactorError::NotUnivariate)?;
    let seeds = roots(&float_coeffs).ok_or(FactorError::NoConvergence)?;
    for bits in PRECISIONS {
        let ctx = Ctx { bits };
        let precise: Option<Vec<Fixed>> = seeds.iter().map(|s| ctx.refine(&coeffs, *s)).collect();
        let Some(mut precise) = precise else { continue };
        let mut approx: Vec<Complex64> =
            precise.iter().map(|z| Complex64::new(ctx.to_f64(&z.re), ctx.to_f64(&z.im))).collect();
        let mut rest = f.clone();
        let mut found = Vec::new();
        let mut size = 1;
        while 2 * size <= approx.len() && size <= max_subset {
            match find_factor(&ctx, &rest, var, &approx, &precise, size) {
                Some((factor, idx)) => {
                    rest = rest.div_exact(&factor).expect("verified division");
                    for &i in idx.iter().rev() {
                        approx.remove(i);
                        precise.remove(i);
                    }
                    found.push(factor);
                }
                None => size += 1,
            }
        }
        if !rest.is_one() {
            found.push(rest);
        }
        return Ok(found);
    }
    Err(FactorError::NoConvergence)
}

/// Monic irreducible factors over the integers, repeated according to
/// multiplicity and sorted by degree, then by coefficients.
///
/// Subsets of at most `max_subset` roots are tried; the factorization is
/// complete whenever `max_subset` is at least half the degree.
pub fn factor_oracle(f: &MultiPoly, var: &str, max_subset: usize) -> Result<Vec<MultiPoly>, FactorError> {
    let coeffs = integer_coeffs(f, var)?;
    let deg = coeffs.len() - 1;
    if deg > MAX_DEGREE {
        return Err(FactorError::DegreeTooLarge(deg));
    }
    let df = f.derivative(var).map_err(|_| FactorError::NotUnivariate)?;
    let g = f.gcd_in(&df, var).map_err(|_| FactorError::NotUnivariate)?;
    let squarefree = f.div_exact(&g).ok_or(FactorError::NotMonicInteger)?.monic();
    let mut out = Vec::new();
    for q in factor_squarefree(&squarefree, var, max_subset)? {
        let mut rest = f.clone();
        while let Some(next) = rest.div_exact(&q) {
            out.push(q.clone());
            rest = next;
        }
    }
    out.sort_by(|a, b| {
        let da = a.degree_in(var).ok().flatten();
        let db = b.degree_in(var).ok().flatten();
        da.cmp(&db).then_with(|| a.terms().cmp(b.terms()))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(s: &str) -> MultiPoly {
        MultiPoly::parse(&["z"], s).unwrap()
    }

    #[test]
    fn splits_difference_of_squares() {
        let f = factor_oracle(&z("z^2 - 1"), "z", 12).unwrap();
        assert_eq!(f, alloc::vec![z("z - 1"), z("z + 1")]);
    }

    #[test]
    fn keeps_irreducible_cubic() {
        let f = factor_oracle(&z("z^3 - z^2 - 2*z + 1"), "z", 12).unwrap();
        assert_eq!(f, alloc::vec![z("z^3 - z^2 - 2*z + 1")]);
    }

    #[test]
    fn repeated_and_complex_factors() {
        // (z - 2)^2 (z^2 + z + 1)
        let f = &z("z - 2").pow(2) * &z("z^2 + z + 1");
        let got = factor_oracle(&f, "z", 12).unwrap();
        assert_eq!(got, alloc::vec![z("z - 2"), z("z - 2"), z("z^2 + z + 1")]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(factor_oracle(&z("2*z - 1"), "z", 4), Err(FactorError::NotMonicInteger));
        assert_eq!(factor_oracle(&z("3"), "z", 4), Err(FactorError::NotUnivariate));
        let xz = MultiPoly::parse(&["x", "z"], "z^2 + x").unwrap();
        assert_eq!(factor_oracle(&xz, "z", 4), Err(FactorError::NotUnivariate));
    }
}
