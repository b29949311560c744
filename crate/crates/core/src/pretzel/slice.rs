//! The `x = 0` slice of the ideal `(P, Q_n)`.
//!
//! At `x = 0`, `P = z(y² − 3 + z²)` and `Q_n = a_n + b_n z²`. With
//! `U_n = S_n + S_{n−1}` one has `b_n² z P = (Q_n − a_n)(Q_n − U_n)`, which
//! puts `a_n U_n` in the ideal. Radicality then follows from Seidenberg's
//! lemma once the ideal contains a square-free polynomial in `y` alone
//! (`a_n U_n`) and one in `z` alone (`z ∏ (r² − 3 + z²)` over the roots `r`
//! of `a_n U_n`).

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::exactpoly::numeric::{eval_univariate, roots, univariate_coeffs};
use crate::exactpoly::{rat, MultiPoly};
use crate::report::VerificationReport;

use super::polys::{a_n, b_n, p_closed, q_closed, s, XYZ};

/// Exact data of the `x = 0` slice for one `n`, all in `(x, y, z)` but free
/// of `x`.
#[derive(Clone, Debug)]
pub struct X0SliceData {
    pub n: i64,
    pub a_n: MultiPoly,
    pub b_n: MultiPoly,
    pub u_n: MultiPoly,
    /// `b_n² z P = (Q_n − a_n)(Q_n − U_n)` at `x = 0`, and `Q_n = a_n + b_n z²` there.
    pub identity_ok: bool,
    /// `a_n U_n` is square-free in `y`.
    pub squarefree_ok: bool,
    /// Largest `|U_n|` and `|a_n|` at the cosine roots, when `n ≥ 3`.
    pub root_residuals: Option<(f64, f64)>,
}

pub fn u_n(n: i64) -> MultiPoly {
    &s(n) + &s(n - 1)
}

fn at_x0(p: &MultiPoly) -> MultiPoly {
    p.eval_at("x", &rat(0)).expect("x is a variable")
}

/// `2cos(2πj/(2n+1))`, `j = 1..n`: the roots of `U_n` for `n ≥ 1`.
pub fn u_roots(n: i64) -> Vec<f64> {
    (1..=n).map(|j| 2.0 * libm::cos(2.0 * PI * j as f64 / (2 * n + 1) as f64)).collect()
}

/// `2cos((2k+1)π/(2n−5))`, `k = 0..n−3`: the roots of `a_n` for `n ≥ 3`.
pub fn a_roots(n: i64) -> Vec<f64> {
    (0..=n - 3).map(|k| 2.0 * libm::cos((2 * k + 1) as f64 * PI / (2 * n - 5) as f64)).collect()
}

fn y_coeffs(p: &MultiPoly) -> Vec<Complex64> {
    let uni = p.drop_var("x").and_then(|q| q.drop_var("z")).expect("polynomial in y only");
    univariate_coeffs(&uni, "y").expect("polynomial in y only").into_iter().map(|c| Complex64::new(c, 0.0)).collect()
}

fn max_residual(p: &MultiPoly, points: &[f64]) -> f64 {
    let c = y_coeffs(p);
    points.iter().map(|&y| eval_univariate(&c, Complex64::new(y, 0.0)).norm()).fold(0.0, f64::max)
}

pub fn x0_slice(n: i64) -> X0SliceData {
    let a = a_n(n);
    let b = b_n(n);
    let u = u_n(n);
    let z = MultiPoly::var(&XYZ, "z");
    let p0 = at_x0(&p_closed());
    let q0 = at_x0(&q_closed(n));
    let shape = q0 == &a + &(&b * &z.pow(2));
    let lhs = &(&b.pow(2) * &z) * &p0;
    let rhs = &(&q0 - &a) * &(&q0 - &u);
    let au = &a * &u;
    let squarefree_ok = !au.is_zero() && au.is_squarefree_in("y").unwrap_or(false);
    let root_residuals = (n >= 3).then(|| (max_residual(&u, &u_roots(n)), max_residual(&a, &a_roots(n))));
    X0SliceData { n, identity_ok: shape && lhs == rhs, squarefree_ok, root_residuals, a_n: a, b_n: b, u_n: u }
}

pub fn x0_slice_report(n: i64, tol: f64) -> VerificationReport {
    let data = x0_slice(n);
    let mut r = VerificationReport::new("XZeroSlice", format!("n={n}"));
    r.check("factorization_identity", data.identity_ok);
    r.check("a_n_U_n_squarefree", data.squarefree_ok);
    r.detail("a_n", data.a_n.clone());
    r.detail("b_n", data.b_n.clone());
    r.detail("U_n", data.u_n.clone());
    if let Some((ru, ra)) = data.root_residuals {
        r.detail("max_residual_U_n", ru);
        r.detail("max_residual_a_n", ra);
        r.numeric_check("cosine_roots", ru < tol && ra < tol);
    }
    r
}

/// Roots of `a_n U_n` in `y`: the two cosine families when `n ≥ 3`,
/// otherwise the numerical roots of the exact polynomial.
fn y_roots(n: i64, au: &MultiPoly) -> Option<Vec<Complex64>> {
    if n >= 3 {
        let mut out: Vec<Complex64> = u_roots(n).into_iter().map(|r| Complex64::new(r, 0.0)).collect();
        out.extend(a_roots(n).into_iter().map(|r| Complex64::new(r, 0.0)));
        return Some(out);
    }
    let c: Vec<f64> = y_coeffs(au).iter().map(|c| c.re).collect();
    roots(&c)
}

/// Radicality of the ideal at `x = 0`, certified two ways.
///
/// The `y`-certificate is exact: `a_n U_n = a_n Q_n − Q_n² + Q_n U_n +
/// b_n² z P` at `x = 0`, and `a_n U_n` is square-free.
///
/// Given that, the quotient splits over the roots `r` of `a_n U_n`, and each
/// factor is `Q[z]` modulo a divisor of `z(z² − 3 + r²)`. Those are
/// square-free as long as `r² ≠ 3`, which is the exact test
/// `gcd(a_n U_n, y² − 3) = 1` and settles radicality on its own.
///
/// The product `V_n = z ∏ (r² − 3 + z²)` is the `z`-side certificate for
/// Seidenberg's lemma. It is square-free exactly when, in addition, no two
/// roots satisfy `r = −r′`, i.e. `gcd(f(y), f(−y)) = 1` for `f = a_n U_n`.
/// That is recorded both exactly and as a floating-point root separation,
/// but does not decide the status: for some `n` (`n = 7` is the first) two
/// roots are negatives of each other and `V_n` has a repeated factor.
pub fn seidenberg_check(n: i64, tol: f64) -> VerificationReport {
    let mut r = VerificationReport::new("SeidenbergCertificates", format!("n={n}"));
    let a = a_n(n);
    let b = b_n(n);
    let u = u_n(n);
    let y = MultiPoly::var(&XYZ, "y");
    let z = MultiPoly::var(&XYZ, "z");
    let p0 = at_x0(&p_closed());
    let q0 = at_x0(&q_closed(n));
    let au = &a * &u;
    let combo = &(&(&(&a * &q0) - &q0.pow(2)) + &(&q0 * &u)) + &(&(&b.pow(2) * &z) * &p0);
    r.check("y_certificate_in_ideal", combo == au);
    r.check("y_certificate_squarefree", !au.is_zero() && au.is_squarefree_in("y").unwrap_or(false));
    let three = MultiPoly::from_int(&XYZ, 3);
    let coprime = |g: Result<MultiPoly, _>| g.map(|g| g.is_constant()).unwrap_or(false);
    r.check("fibers_squarefree", coprime(au.gcd(&(&y.pow(2) - &three))));
    let mirrored = au.substitute("y", &-&y).expect("y is a variable");
    let v_exact = coprime(au.gcd(&mirrored)) && coprime(au.gcd(&(&y.pow(2) - &three)));
    r.detail("v_n_squarefree", v_exact);

    let Some(ys) = y_roots(n, &au) else {
        r.detail("v_n_root_separation", "root finder did not converge");
        return r;
    };
    r.detail("root_source", if n >= 3 { "cosine" } else { "numeric" });
    let three = Complex64::new(3.0, 0.0);
    let mut zs = alloc::vec![Complex64::new(0.0, 0.0)];
    for y in &ys {
        let w = (three - y * y).sqrt();
        zs.push(w);
        zs.push(-w);
    }
    let mut min_gap = f64::INFINITY;
    for i in 0..zs.len() {
        for j in i + 1..zs.len() {
            min_gap = min_gap.min((zs[i] - zs[j]).norm());
        }
    }
    r.detail("v_n_degree", zs.len());
    r.detail("v_n_min_root_separation", min_gap);
    r.detail("v_n_numeric_squarefree", min_gap > tol);
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Detail;

    #[test]
    fn slice_n3() {
        let d = x0_slice(3);
        assert!(d.identity_ok && d.squarefree_ok);
        assert!(u_n(0).is_one());
        assert_eq!(u_n(1), MultiPoly::parse(&XYZ, "y + 1").unwrap());
    }

    #[test]
    fn cosine_residuals_n5() {
        let (ru, ra) = x0_slice(5).root_residuals.unwrap();
        assert!(ru < 1e-9 && ra < 1e-9, "{ru} {ra}");
    }

    #[test]
    fn u_recursion() {
        let y = MultiPoly::var(&XYZ, "y");
        for n in -10..=10 {
            assert_eq!(u_n(n + 1), &(&y * &u_n(n)) - &u_n(n - 1));
        }
    }

    #[test]
    fn v7_has_a_repeated_factor() {
        // y = 1 is a root of a_7 and y = -1 a root of U_7.
        let r = seidenberg_check(7, 1e-9);
        assert!(matches!(r.get("v_n_squarefree"), Some(Detail::Bool(false))));
    }

    #[test]
    fn certificates() {
        for n in -6..=12 {
            let r = seidenberg_check(n, 1e-9);
            assert!(r.passed(), "{r:?}");
            let exact = matches!(r.get("v_n_squarefree"), Some(Detail::Bool(true)));
            let numeric = matches!(r.get("v_n_numeric_squarefree"), Some(Detail::Bool(true)));
            assert_eq!(exact, numeric, "n={n}");
        }
    }
}
