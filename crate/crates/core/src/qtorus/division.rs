use alloc::format;

use super::coeff::{LocalizedScalar, TorusCoeff};
use super::elem::QTElem;
use super::QTorusError;

/// One step of the weak division algorithm: `q = a L^k` with
/// `k = deg f − deg g` and `a = lc(f) / lc(g)(t, t^{2k} M)`, so that
/// `r = f − q g` has lower `L`-degree than `f`.
///
/// `a` lies in the local ring exactly when the height of `lc(f)` is at least
/// that of `lc(g)`; the twist does not change heights.
pub fn weak_divide(
    f: &QTElem<LocalizedScalar>,
    g: &QTElem<LocalizedScalar>,
) -> Result<(QTElem<LocalizedScalar>, QTElem<LocalizedScalar>), QTorusError> {
    let pre = |msg: &str| QTorusError::Division(msg.into());
    let (Some(g_lo), Some(g_hi)) = (g.min_l(), g.max_l()) else {
        return Err(pre("g is zero"));
    };
    let (Some(f_lo), Some(f_hi)) = (f.min_l(), f.max_l()) else {
        return Err(pre("f is zero"));
    };
    if f_lo < 0 || g_lo < 0 {
        return Err(pre("f and g must be polynomial in L"));
    }
    if f_hi < g_hi {
        return Err(pre("deg f < deg g"));
    }
    let lf = f.leading_coeff().expect("non-zero");
    let lg = g.leading_coeff().expect("non-zero");
    if lf.height() < lg.height() {
        return Err(pre(&format!("height of lc(f) ({:?}) below height of lc(g) ({:?})", lf.height(), lg.height())));
    }
    let k = f_hi - g_hi;
    let a = lf.checked_div(&lg.twist(k)).map_err(|e| QTorusError::Division(format!("leading quotient: {e}")))?;
    let q = QTElem::monomial(a, k);
    let qg = q.qt_mul(g);
    let r = f - &qg;
    let ok = &qg + &r == *f && r.max_l().is_none_or(|d| d < f_hi);
    if !ok {
        return Err(QTorusError::Division("postcondition f = qg + r, deg r < deg f".into()));
    }
    Ok((q, r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loc(s: &str) -> QTElem<LocalizedScalar> {
        QTElem::parse(s).unwrap().map_coeffs(|c| LocalizedScalar::from_poly(c.clone()))
    }

    #[test]
    fn monomial_division() {
        let (q, r) = weak_divide(&loc("M*L^2 + 1"), &loc("L")).unwrap();
        assert_eq!(r, loc("1"));
        assert_eq!(q.max_l(), Some(1));
        assert_eq!(&(&q * &loc("L")) + &r, loc("M*L^2 + 1"));
    }

    #[test]
    fn self_division() {
        let g = loc("M*L^2 + t*M*L^2 - L + t");
        let (q, r) = weak_divide(&g, &g).unwrap();
        assert_eq!(q, loc("1"));
        assert!(r.is_zero());
    }

    #[test]
    fn height_precondition() {
        let g = loc("L + t*L + 1");
        assert!(matches!(weak_divide(&loc("L + 1"), &g), Err(QTorusError::Division(_))));
        let f = loc("L^2 + 2*t*L^2 + t^2*L^2 + M");
        let (q, r) = weak_divide(&f, &g).unwrap();
        assert_eq!(q, loc("L + t*L"));
        assert_eq!(r, loc("M - L - t*L"));
    }
}
