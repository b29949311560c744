//! Exact division, gcd, resultants and square-free tests.

use alloc::borrow::ToOwned;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{MultiPoly, PolyError};

impl MultiPoly {
    /// `Some(q)` with `self = q * divisor`, `None` when the division is not
    /// exact in this ring. Monomials in Laurent variables count as units.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        if divisor.is_zero() {
            return None;
        }
        let (a, b) = if self.vars() == divisor.vars() {
            (self.clone(), divisor.clone())
        } else {
            let vars = self.union_vars(divisor);
            let flags: Vec<bool> = vars.iter().map(|v| self.is_laurent(v) || divisor.is_laurent(v)).collect();
            let mut a = self.aligned(&vars).ok()?;
            let mut b = divisor.aligned(&vars).ok()?;
            a.set_flags(&flags);
            b.set_flags(&flags);
            (a, b)
        };
        if a.is_zero() {
            return Some(a);
        }
        let sa = a.min_exponents();
        let sb = b.min_exponents();
        let neg = |s: &[i32]| s.iter().map(|x| -x).collect::<Vec<_>>();
        let a0 = a.shift(&neg(&sa));
        let b0 = b.shift(&neg(&sb));
        let q0 = a0.div_exact_poly(&b0)?;
        let delta: Vec<i32> = sa.iter().zip(&sb).map(|(x, y)| x - y).collect();
        let q = q0.shift(&delta);
        let flags = q.laurent_flags();
        let ok = q.terms().all(|(e, _)| e.iter().zip(flags).all(|(k, l)| *k >= 0 || *l));
        ok.then_some(q)
    }

    pub(crate) fn set_flags(&mut self, flags: &[bool]) {
        *self = self.clone().with_laurent(
            &self.vars().iter().zip(flags).filter(|(_, f)| **f).map(|(v, _)| v.as_str()).collect::<Vec<_>>(),
        );
    }

    /// Division of polynomials with non-negative exponents by lexicographic
    /// leading terms.
    fn div_exact_poly(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        let (lead_e, lead_c) = divisor.leading_term()?;
        let lead_e = lead_e.to_vec();
        let lead_c = lead_c.clone();
        let mut rem = self.clone();
        let mut quotient = self.zero_like();
        while let Some((e, c)) = rem.leading_term() {
            if e.iter().zip(&lead_e).any(|(a, b)| a < b) {
                return None;
            }
            let te: Vec<i32> = e.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
            let tc = c / &lead_c;
            let term = rem.monomial_unchecked(te, tc);
            rem = &rem - &(&term * divisor);
            quotient = &quotient + &term;
        }
        Some(quotient)
    }

    fn monomial_unchecked(&self, exp: Vec<i32>, coeff: super::Rational) -> MultiPoly {
        let mut p = self.zero_like();
        p.add_term(exp, coeff);
        p
    }

    /// Greatest common divisor over the rationals, in all variables,
    /// normalized with coprime integer coefficients and a positive leading
    /// coefficient. Monomials in Laurent variables are treated as units.
    pub fn gcd(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        let (a, b) = common(self, other);
        match (a.is_zero(), b.is_zero()) {
            (true, true) => return Err(PolyError::UndefinedGcd),
            (true, false) => return Ok(strip_units(&b).normalized()),
            (false, true) => return Ok(strip_units(&a).normalized()),
            _ => {}
        }
        let sa = a.min_exponents();
        let sb = b.min_exponents();
        let flags = a.laurent_flags().to_vec();
        let neg = |s: &[i32]| s.iter().map(|x| -x).collect::<Vec<_>>();
        let a0 = a.shift(&neg(&sa));
        let b0 = b.shift(&neg(&sb));
        let mono: Vec<i32> =
            sa.iter().zip(&sb).zip(&flags).map(|((x, y), l)| if *l { 0 } else { (*x).min(*y) }).collect();
        let g = gcd_poly(&a0, &b0).shift(&mono);
        Ok(g.normalized())
    }

    /// Gcd of `self` and `other` viewed as univariate polynomials in `var`
    /// with coefficients in the remaining variables; includes the gcd of
    /// the contents so that any common factor divides the result.
    pub fn gcd_in(&self, other: &MultiPoly, var: &str) -> Result<MultiPoly, PolyError> {
        let (a, b) = common(self, other);
        a.index_of(var)?;
        a.gcd(&b)
    }

    /// Pseudo-remainder of `self` by `divisor` in `var`.
    pub fn pseudo_rem_in(&self, divisor: &MultiPoly, var: &str) -> Result<MultiPoly, PolyError> {
        let (a, b) = common(self, divisor);
        let i = a.index_of(var)?;
        if b.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(prem(&a, &b, i))
    }

    /// Remainder modulo a polynomial whose leading coefficient in `var` is a
    /// non-zero constant (e.g. reduction modulo `i^2 + 1`).
    pub fn rem_monic_in(&self, modulus: &MultiPoly, var: &str) -> Result<MultiPoly, PolyError> {
        let (a, m) = common(self, modulus);
        let i = a.index_of(var)?;
        let deg_m = m.degree_in(var)?.ok_or(PolyError::DivisionByZero)?;
        let lc = m
            .coeff_of(var, deg_m)?
            .as_constant()
            .ok_or_else(|| PolyError::Unsupported("modulus leading coefficient must be constant".to_owned()))?;
        let lc_inv = num_traits::Inv::inv(lc);
        let mut r = a;
        loop {
            let deg = match r.degree_in(var)? {
                Some(d) if d >= deg_m => d,
                _ => return Ok(r),
            };
            let top = r.coeff_of(var, deg)?.scale(&lc_inv);
            let mut shift = vec![0; r.vars().len()];
            shift[i] = deg - deg_m;
            r = &r - &(&top * &m.shift(&shift));
        }
    }

    /// Determinant of the Sylvester matrix of `self` and `other` in `var`.
    ///
    /// Rows hold the coefficients of `self` first (`deg other` of them), then
    /// those of `other`, each row listing coefficients from the highest power
    /// down. This gives `Res(f, g) = lc(f)^deg(g) * prod_{f(a)=0} g(a)`.
    pub fn resultant_in(&self, other: &MultiPoly, var: &str) -> Result<MultiPoly, PolyError> {
        let (a, b) = common(self, other);
        let i = a.index_of(var)?;
        if a.is_zero() || b.is_zero() {
            return Err(PolyError::UndefinedResultant("zero input".to_owned()));
        }
        if a.terms().chain(b.terms()).any(|(e, _)| e[i] < 0) {
            return Err(PolyError::Unsupported(alloc::format!("negative powers of `{var}` in a resultant")));
        }
        let m = a.degree_in(var)?.unwrap_or(0) as usize;
        let n = b.degree_in(var)?.unwrap_or(0) as usize;
        if m == 0 && n == 0 {
            return Err(PolyError::UndefinedResultant(alloc::format!("both inputs have degree 0 in `{var}`")));
        }
        if m == 0 {
            return Ok(a.pow(n as u32));
        }
        if n == 0 {
            return Ok(b.pow(m as u32));
        }
        let ca = a.coeffs_at(i);
        let cb = b.coeffs_at(i);
        let zero = a.zero_like();
        let coeff = |c: &alloc::collections::BTreeMap<i32, MultiPoly>, k: usize| {
            c.get(&(k as i32)).cloned().unwrap_or_else(|| zero.clone())
        };
        let size = m + n;
        let mut rows = vec![vec![zero.clone(); size]; size];
        for r in 0..n {
            for k in 0..=m {
                rows[r][r + k] = coeff(&ca, m - k);
            }
        }
        for r in 0..m {
            for k in 0..=n {
                rows[n + r][r + k] = coeff(&cb, n - k);
            }
        }
        Ok(bareiss_det(rows, &a.one_like()))
    }

    /// True iff `gcd(self, d self / d var)` does not involve `var`.
    pub fn is_squarefree_in(&self, var: &str) -> Result<bool, PolyError> {
        if self.is_zero() {
            return Err(PolyError::EmptyInput("square-free test of zero".to_owned()));
        }
        let d = self.derivative(var)?;
        let g = self.gcd_in(&d, var)?;
        g.is_constant_in(var)
    }
}

fn common(a: &MultiPoly, b: &MultiPoly) -> (MultiPoly, MultiPoly) {
    if a.vars() == b.vars() {
        let mut a = a.clone();
        let mut b = b.clone();
        let flags: Vec<bool> = a.laurent_flags().iter().zip(b.laurent_flags()).map(|(x, y)| *x || *y).collect();
        a.set_flags(&flags);
        b.set_flags(&flags);
        return (a, b);
    }
    let vars = a.union_vars(b);
    let flags: Vec<bool> = vars.iter().map(|v| a.is_laurent(v) || b.is_laurent(v)).collect();
    let mut a = a.aligned(&vars).expect("union");
    let mut b = b.aligned(&vars).expect("union");
    a.set_flags(&flags);
    b.set_flags(&flags);
    (a, b)
}

/// Divides out monomials in Laurent variables.
fn strip_units(p: &MultiPoly) -> MultiPoly {
    let mins = p.min_exponents();
    let shift: Vec<i32> = mins.iter().zip(p.laurent_flags()).map(|(m, l)| if *l { -m } else { 0 }).collect();
    p.shift(&shift)
}

/// Gcd of polynomials with non-negative exponents, up to a rational factor.
fn gcd_poly(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return a.one_like();
    }
    let used = |p: &MultiPoly, i: usize| p.terms().any(|(e, _)| e[i] != 0);
    let i = (0..a.vars().len()).find(|&i| used(a, i) || used(b, i)).expect("non-constant input uses a variable");
    if !used(a, i) {
        return gcd_poly(a, &content_at(b, i));
    }
    if !used(b, i) {
        return gcd_poly(&content_at(a, i), b);
    }
    let ca = content_at(a, i);
    let cb = content_at(b, i);
    let c = gcd_poly(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let prim = prs(pa, pb, i);
    &c * &prim
}

/// Gcd of the coefficients in variable `i`.
fn content_at(p: &MultiPoly, i: usize) -> MultiPoly {
    let mut g = p.zero_like();
    for c in p.coeffs_at(i).into_values() {
        g = gcd_poly(&g, &c);
        if g.is_constant() {
            return g.one_like();
        }
    }
    g.normalized()
}

fn degree_at(p: &MultiPoly, i: usize) -> i32 {
    p.terms().map(|(e, _)| e[i]).max().unwrap_or(-1)
}

/// Primitive polynomial remainder sequence in variable `i` for primitive
/// inputs; returns the primitive gcd.
fn prs(a: MultiPoly, b: MultiPoly, i: usize) -> MultiPoly {
    let (mut a, mut b) = if degree_at(&a, i) >= degree_at(&b, i) { (a, b) } else { (b, a) };
    loop {
        let r = prem(&a, &b, i);
        if r.is_zero() {
            return b.normalized();
        }
        if degree_at(&r, i) == 0 {
            return b.one_like();
        }
        let cr = content_at(&r, i);
        a = b;
        b = r.div_exact(&cr).expect("content divides").normalized();
    }
}

fn prem(a: &MultiPoly, b: &MultiPoly, i: usize) -> MultiPoly {
    let n = degree_at(b, i);
    let coeffs = b.coeffs_at(i);
    let lc_b = coeffs.get(&n).cloned().unwrap_or_else(|| b.zero_like());
    let mut r = a.clone();
    loop {
        let d = degree_at(&r, i);
        if r.is_zero() || d < n {
            return r;
        }
        let lc_r = r.coeffs_at(i).remove(&d).expect("degree attained");
        let mut shift = vec![0; r.vars().len()];
        shift[i] = d - n;
        r = &(&lc_b * &r) - &(&lc_r * &b.shift(&shift));
        let cr = r.rational_content();
        if !cr.is_zero() {
            r = r.scale(&num_traits::Inv::inv(cr));
        }
    }
}

/// Fraction-free Gaussian elimination.
fn bareiss_det(mut m: Vec<Vec<MultiPoly>>, one: &MultiPoly) -> MultiPoly {
    let n = m.len();
    let mut negate = false;
    let mut prev = one.clone();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return one.zero_like(),
            }
        }
        for r in k + 1..n {
            for c in k + 1..n {
                let num = &(&m[r][c] * &m[k][k]) - &(&m[r][k] * &m[k][c]);
                m[r][c] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[r][k] = one.zero_like();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

impl MultiPoly {
    /// True when `self` is divisible by `divisor` in this ring.
    pub fn is_divisible_by(&self, divisor: &MultiPoly) -> bool {
        if divisor.is_zero() {
            return self.is_zero();
        }
        self.div_exact(divisor).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    fn p(vars: &[&str], s: &str) -> MultiPoly {
        MultiPoly::parse(vars, s).unwrap()
    }

    #[test]
    fn exact_division() {
        let v = ["x", "y"];
        let a = p(&v, "x^2 - y^2");
        assert_eq!(a.div_exact(&p(&v, "x - y")).unwrap(), p(&v, "x + y"));
        assert!(a.div_exact(&p(&v, "x - 2*y")).is_none());
        let l = p(&["s", "u"], "s^-3*u + s^-1");
        assert_eq!(l.div_exact(&p(&["s", "u"], "s^-1")).unwrap(), p(&["s", "u"], "s^-2*u + 1"));
    }

    #[test]
    fn gcd_of_repeated_factor() {
        let v = ["z"];
        assert!(MultiPoly::parse(&v, "(z - 1)").is_err());
        let f = &p(&v, "z - 1").pow(2) * &p(&v, "z + 2");
        let g = f.gcd_in(&f.derivative("z").unwrap(), "z").unwrap();
        assert_eq!(g, p(&v, "z - 1"));
        assert!(p(&v, "z - 1").gcd_in(&p(&v, "z + 1"), "z").unwrap().is_one());
    }

    #[test]
    fn gcd_multivariate_and_content() {
        let v = ["x", "y", "z"];
        let g = p(&v, "x*y + z - 1");
        let a = &g * &p(&v, "x^2 + y");
        let b = &g * &p(&v, "z^3 - x");
        assert_eq!(a.gcd_in(&b, "z").unwrap(), g.normalized());
        let c = p(&v, "y + 1");
        let a = &c * &p(&v, "z - x");
        let b = &c * &p(&v, "z + x");
        assert_eq!(a.gcd_in(&b, "z").unwrap(), c);
        assert_eq!(MultiPoly::zero(&v).gcd(&MultiPoly::zero(&v)), Err(PolyError::UndefinedGcd));
    }

    #[test]
    fn resultant_conventions() {
        let v = ["y", "z"];
        let r = p(&v, "z - 3").resultant_in(&p(&v, "z - 5"), "z").unwrap();
        assert_eq!(r, MultiPoly::from_int(&v, -2));
        let r = p(&v, "z^2 - y").resultant_in(&p(&v, "z"), "z").unwrap();
        assert_eq!(r, p(&v, "-y"));
        assert!(matches!(p(&v, "y").resultant_in(&p(&v, "y + 1"), "z"), Err(PolyError::UndefinedResultant(_))));
        // constant against degree 3: c^3
        let r = p(&v, "2").resultant_in(&p(&v, "z^3 + y"), "z").unwrap();
        assert_eq!(r, MultiPoly::from_int(&v, 8));
    }

    #[test]
    fn resultant_matches_product_formula() {
        // Res(f, g) = lc(f)^deg g * prod g(roots of f) for f = 2(z-1)(z-2)
        let v = ["z"];
        let f = p(&v, "2*z^2 - 6*z + 4");
        let g = p(&v, "z^2 + 1");
        let expected = rat(4) * rat(2) * rat(5);
        assert_eq!(f.resultant_in(&g, "z").unwrap().as_constant().unwrap(), expected);
    }

    #[test]
    fn squarefree() {
        let v = ["z"];
        let f = &p(&v, "z - 1").pow(2) * &p(&v, "z + 2");
        assert!(!f.is_squarefree_in("z").unwrap());
        assert!(p(&v, "z^2 - z - 1").is_squarefree_in("z").unwrap());
        assert!(MultiPoly::zero(&v).is_squarefree_in("z").is_err());
    }

    #[test]
    fn reduction_mod_i_squared_plus_one() {
        let v = ["i", "x"];
        let m = p(&v, "i^2 + 1");
        assert_eq!(p(&v, "i^3 + x*i^2").rem_monic_in(&m, "i").unwrap(), p(&v, "-i - x"));
    }
}
