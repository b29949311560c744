use alloc::format;

use crate::exactpoly::MultiPoly;
use crate::report::VerificationReport;
use crate::sl2trace::cheb_t;

use super::polys::{p_closed, q_closed, XYZ};

fn t(k: i64) -> MultiPoly {
    cheb_t(k, &MultiPoly::var(&XYZ, "y"))
}

/// `Σ c·T_{k}(y)` for a list of `(c, k)`.
fn t_combination(terms: &[(i64, i64)]) -> MultiPoly {
    terms.iter().fold(MultiPoly::zero(&XYZ), |acc, &(c, k)| &acc + &t(k).scale(&crate::exactpoly::rat(c)))
}

/// The bracketed Chebyshev-`T` expression `E_n` in the closed form
/// `Res_z(P, Q_n) = (y + 2 − x²) E_n / ((y² − 4)(y + 2))`.
pub fn e_n(n: i64) -> MultiPoly {
    let x2 = MultiPoly::var(&XYZ, "x").pow(2);
    let constant = t_combination(&[
        (1, 3 * n),
        (3, 3 * n - 1),
        (3, 3 * n - 2),
        (1, 3 * n - 3),
        (1, n + 5),
        (3, n + 4),
        (3, n + 3),
        (1, n + 2),
        (-2, n - 1),
        (-6, n - 2),
        (-6, n - 3),
        (-2, n - 4),
    ]);
    let quadratic = t_combination(&[
        (-1, 3 * n - 1),
        (-1, 3 * n - 2),
        (-2, n + 3),
        (-3, n + 2),
        (-1, n + 1),
        (-5, n),
        (-2, n - 1),
        (8, n - 2),
        (6, n - 3),
        (1, n - 4),
    ]);
    let quartic = t_combination(&[(1, n + 1), (2, n), (-2, n - 2), (-1, n - 3)]);
    &(&constant + &(&x2 * &quadratic)) + &(&x2.pow(2) * &quartic)
}

/// `Res_z(P, Q_n)`, Sylvester determinant with the rows of `P` first.
pub fn resultant(n: i64) -> MultiPoly {
    p_closed().resultant_in(&q_closed(n), "z").expect("P and Q_n have positive z-degree")
}

/// The `y`-degree the closed form predicts when it is unambiguous.
pub fn predicted_y_degree(n: i64) -> Option<i32> {
    if n >= 4 {
        Some(3 * n as i32 - 2)
    } else if n <= -5 {
        Some(1 - 3 * n as i32)
    } else {
        None
    }
}

/// Monic in `y` (leading coefficient exactly `1`, free of `x`), the
/// predicted `y`-degree, and the closed `T`-form identity
/// `(y² − 4)(y + 2)·Res = (y + 2 − x²)·E_n`.
pub fn resultant_report(n: i64) -> VerificationReport {
    let mut r = VerificationReport::new("ResultantStructure", format!("n={n}"));
    let res = resultant(n);
    let deg = res.degree_in("y").ok().flatten();
    let lead = res.leading_coeff_in("y").expect("y is a variable");
    r.check("leading_coefficient_is_1", lead.is_one());
    if let Some(d) = deg {
        r.detail("y_degree", d);
    }
    if let Some(expect) = predicted_y_degree(n) {
        r.check("y_degree_matches", deg == Some(expect));
    }
    let y = MultiPoly::var(&XYZ, "y");
    let x = MultiPoly::var(&XYZ, "x");
    let two = MultiPoly::from_int(&XYZ, 2);
    let lhs = &(&(&y.pow(2) - &MultiPoly::from_int(&XYZ, 4)) * &(&y + &two)) * &res;
    let rhs = &(&(&y + &two) - &x.pow(2)) * &e_n(n);
    let residual = &lhs - &rhs;
    if !r.check("closed_form_identity", residual.is_zero()) {
        r.detail("residual", residual);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_at_the_edges() {
        assert_eq!(resultant(4).degree_in("y").unwrap(), Some(10));
        assert_eq!(resultant(-5).degree_in("y").unwrap(), Some(16));
        assert!(resultant(2).leading_coeff_in("y").unwrap().is_one());
    }

    #[test]
    fn reports_pass_in_a_window() {
        for n in [-5, -1, 0, 3, 4] {
            let r = resultant_report(n);
            assert!(r.passed(), "{r:?}");
        }
    }
}
