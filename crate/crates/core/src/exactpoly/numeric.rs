//! Floating-point evaluation and root finding. These are oracles for the
//! exact code paths, never a substitute for them.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use super::{MultiPoly, PolyError};

/// Absolute tolerance used for root residuals unless a caller overrides it.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Evaluates `p` at a complex point by nested Horner schemes, one variable at
/// a time. Converting the rational coefficients to `f64` is the only inexact
/// step.
pub fn eval_complex(p: &MultiPoly, point: &[(&str, Complex64)]) -> Result<Complex64, PolyError> {
    let mut values = Vec::with_capacity(p.vars().len());
    for v in p.vars() {
        let val = point
            .iter()
            .find(|(n, _)| *n == v.as_str())
            .map(|(_, z)| *z)
            .ok_or_else(|| PolyError::MissingAssignment(v.clone()))?;
        values.push(val);
    }
    let terms: Vec<(&[i32], f64)> = p.terms().map(|(e, c)| (e, c.to_f64().unwrap_or(f64::NAN))).collect();
    horner(&terms, &values, 0)
}

fn horner(terms: &[(&[i32], f64)], values: &[Complex64], var: usize) -> Result<Complex64, PolyError> {
    if terms.is_empty() {
        return Ok(Complex64::zero());
    }
    if var == values.len() {
        return Ok(Complex64::new(terms.iter().map(|(_, c)| c).sum(), 0.0));
    }
    let mut groups: BTreeMap<i32, Vec<(&[i32], f64)>> = BTreeMap::new();
    for (e, c) in terms {
        groups.entry(e[var]).or_default().push((e, *c));
    }
    let low = *groups.keys().next().expect("non-empty");
    let high = *groups.keys().next_back().expect("non-empty");
    let x = values[var];
    if low < 0 && x.norm() == 0.0 {
        return Err(PolyError::DivisionByZero);
    }
    let mut acc = Complex64::zero();
    for k in (low..=high).rev() {
        acc *= x;
        if let Some(group) = groups.get(&k) {
            acc += horner(group, values, var + 1)?;
        }
    }
    Ok(acc * x.powi(low))
}

/// Coefficients of a univariate polynomial, lowest degree first.
pub fn univariate_coeffs(p: &MultiPoly, var: &str) -> Result<Vec<f64>, PolyError> {
    let i = p.index_of(var)?;
    if p.terms().any(|(e, _)| e.iter().enumerate().any(|(j, k)| j != i && *k != 0)) {
        return Err(PolyError::Unsupported("polynomial involves more than one variable".to_owned()));
    }
    if p.terms().any(|(e, _)| e[i] < 0) {
        return Err(PolyError::Unsupported("negative exponents".to_owned()));
    }
    let deg = p.degree_in(var)?.unwrap_or(0) as usize;
    let mut out = vec![0.0; deg + 1];
    for (e, c) in p.terms() {
        out[e[i] as usize] = c.to_f64().unwrap_or(f64::NAN);
    }
    Ok(out)
}

pub fn eval_univariate(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::zero(), |acc, c| acc * z + c)
}

fn derivative(coeffs: &[Complex64]) -> Vec<Complex64> {
    coeffs.iter().enumerate().skip(1).map(|(k, c)| c * k as f64).collect()
}

/// All complex roots of a univariate polynomial (coefficients lowest degree
/// first) by the Aberth–Ehrlich iteration. Returns `None` if the iteration
/// does not settle.
pub fn roots(coeffs: &[f64]) -> Option<Vec<Complex64>> {
    let mut c: Vec<Complex64> = coeffs.iter().map(|x| Complex64::new(*x, 0.0)).collect();
    while c.last().is_some_and(|x| x.norm() == 0.0) {
        c.pop();
    }
    let n = c.len().checked_sub(1)?;
    if n == 0 {
        return Some(Vec::new());
    }
    let lead = c[n];
    for x in c.iter_mut() {
        *x /= lead;
    }
    let dc = derivative(&c);
    let radius = 1.0 + c[..n].iter().map(|x| x.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = 2.0 * core::f64::consts::PI * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(0.5 * radius, angle)
        })
        .collect();
    for _ in 0..1000 {
        let mut worst: f64 = 0.0;
        for k in 0..n {
            let pk = eval_univariate(&c, z[k]);
            let dk = eval_univariate(&dc, z[k]);
            if pk.norm() == 0.0 {
                continue;
            }
            let ratio = pk / dk;
            let repulsion: Complex64 = (0..n).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                worst = worst.max(step.norm() / (1.0 + z[k].norm()));
            }
        }
        if worst < 1e-15 {
            return Some(z);
        }
    }
    // Accept if every residual is tiny relative to the coefficient scale.
    let scale: f64 = c.iter().map(|x| x.norm()).sum();
    z.iter().all(|r| eval_univariate(&c, *r).norm() < 1e-10 * scale * libm::pow(1.0 + r.norm(), n as f64)).then_some(z)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_ratio_root() {
        let p = MultiPoly::parse(&["z"], "z^2 - z - 1").unwrap();
        let phi = (1.0 + libm::sqrt(5.0)) / 2.0;
        let v = eval_complex(&p, &[("z", Complex64::new(phi, 0.0))]).unwrap();
        assert!(v.norm() < 1e-12);
    }

    #[test]
    fn constants_and_missing_values() {
        let p = MultiPoly::from_int(&["x", "y"], 7);
        let v = eval_complex(&p, &[("x", Complex64::new(3.0, 1.0)), ("y", Complex64::new(0.0, 0.0))]).unwrap();
        assert_eq!(v, Complex64::new(7.0, 0.0));
        assert!(matches!(eval_complex(&p, &[("x", Complex64::new(1.0, 0.0))]), Err(PolyError::MissingAssignment(_))));
    }

    #[test]
    fn laurent_evaluation() {
        let p = MultiPoly::parse(&["t"], "t^2 + t^-2").unwrap();
        let v = eval_complex(&p, &[("t", Complex64::new(2.0, 0.0))]).unwrap();
        assert!((v - Complex64::new(4.25, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn aberth_finds_all_roots() {
        // (z - 1)(z + 2)(z^2 + 1)
        let r = roots(&[-2.0, 1.0, -1.0, 1.0, 1.0]).unwrap();
        assert_eq!(r.len(), 4);
        for target in
            [Complex64::new(1.0, 0.0), Complex64::new(-2.0, 0.0), Complex64::new(0.0, 1.0), Complex64::new(0.0, -1.0)]
        {
            assert!(r.iter().any(|z| (z - target).norm() < 1e-10), "{target}");
        }
    }
}
