use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::exactpoly::{rat, MultiPoly};
use crate::report::VerificationReport;

use super::elem::QTElem;

/// A function `Z → Q[t^±1]`, evaluated on demand.
pub struct DiscreteSeq<'a> {
    eval: Box<dyn Fn(i64) -> MultiPoly + Send + Sync + 'a>,
}

impl<'a> DiscreteSeq<'a> {
    pub fn new(f: impl Fn(i64) -> MultiPoly + Send + Sync + 'a) -> Self {
        Self { eval: Box::new(f) }
    }

    pub fn at(&self, n: i64) -> MultiPoly {
        (self.eval)(n)
    }

    pub fn constant(value: i64) -> Self {
        Self::new(move |_| t_poly(&[(0, value)]))
    }
}

/// `Σ c t^e` over the single Laurent variable `t`.
pub fn t_poly(terms: &[(i32, i64)]) -> MultiPoly {
    MultiPoly::from_terms(&["t"], &["t"], terms.iter().map(|&(e, c)| (alloc::vec![e], rat(c)))).expect("t is Laurent")
}

/// `(a(t, M) L^j f)(n) = a(t, t^{2n}) f(n + j)`, summed over the terms.
pub fn act(p: &QTElem<MultiPoly>, f: &DiscreteSeq<'_>, n: i64) -> MultiPoly {
    let mut out = t_poly(&[]);
    for (j, a) in p.terms() {
        let mut at_n = t_poly(&[]);
        for (e, c) in a.terms() {
            let exp = e[0] as i64 + 2 * n * e[1] as i64;
            let mono =
                MultiPoly::from_terms(&["t"], &["t"], [(alloc::vec![exp as i32], c.clone())]).expect("t is Laurent");
            at_n = &at_n + &mono;
        }
        out = &out + &(&at_n * &f.at(n + j as i64));
    }
    out
}

/// The sequence `p·f`.
pub fn apply<'a>(p: &'a QTElem<MultiPoly>, f: &'a DiscreteSeq<'a>) -> DiscreteSeq<'a> {
    DiscreteSeq::new(move |n| act(p, f, n))
}

/// `[n] = (t^{2n} − t^{−2n}) / (t² − t^{−2}) = Σ_{j<n} t^{2n−2−4j}` for
/// `n > 0`, with `[0] = 0` and `[−n] = −[n]`.
pub fn jones_unknot(n: i64) -> MultiPoly {
    let m = n.unsigned_abs() as i32;
    let sign = if n < 0 { -1 } else { 1 };
    let terms: Vec<(i32, i64)> = (0..m).map(|j| (2 * m - 2 - 4 * j, sign)).collect();
    t_poly(&terms)
}

pub fn jones_unknot_seq() -> DiscreteSeq<'static> {
    DiscreteSeq::new(jones_unknot)
}

/// `(M² − 1) L − (t² M² − t^{−2})`, the first-order inhomogeneous
/// recurrence satisfied by `[n]`.
pub fn alpha_unknot() -> QTElem<MultiPoly> {
    QTElem::parse("M^2*L - L - t^2*M^2 + t^-2").expect("literal")
}

pub fn annihilation_check(
    p: &QTElem<MultiPoly>,
    f: &DiscreteSeq<'_>,
    range: RangeInclusive<i64>,
) -> VerificationReport {
    let mut r = VerificationReport::new("Annihilation", format!("{p} on [{}, {}]", range.start(), range.end()));
    let failures: Vec<i64> = range.clone().filter(|&n| !act(p, f, n).is_zero()).collect();
    r.detail("window_size", range.count());
    if !failures.is_empty() {
        r.detail("first_nonzero_n", failures[0]);
    }
    r.check("annihilates_window", failures.is_empty());
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_values() {
        assert!(jones_unknot(1).is_one());
        assert!(jones_unknot(0).is_zero());
        assert_eq!(jones_unknot(2), t_poly(&[(2, 1), (-2, 1)]));
        assert_eq!(jones_unknot(-3), -&jones_unknot(3));
    }

    #[test]
    fn action_rules() {
        let f = DiscreteSeq::new(|n| t_poly(&[(n as i32, 1), (0, n)]));
        let l = QTElem::parse("L").unwrap();
        assert_eq!(act(&l, &f, 0), f.at(1));
        let m2l = QTElem::parse("M^2*L").unwrap();
        assert_eq!(act(&m2l, &f, 1), &t_poly(&[(4, 1)]) * &f.at(2));
    }

    #[test]
    fn annihilation() {
        let jones = jones_unknot_seq();
        assert!(annihilation_check(&alpha_unknot(), &jones, -20..=20).passed());
        let ones = DiscreteSeq::constant(1);
        assert!(annihilation_check(&QTElem::parse("L - 1").unwrap(), &ones, -5..=5).passed());
        assert!(!annihilation_check(&QTElem::parse("L").unwrap(), &jones, -3..=3).passed());
    }
}
