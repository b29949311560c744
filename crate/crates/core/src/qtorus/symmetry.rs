use crate::exactpoly::{MultiPoly, RationalFunction};

use super::coeff::is_m_only;
use super::elem::QTElem;

/// Where `L^d` sits relative to `σ(p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaOrdering {
    /// `p = h · σ(p) · L^d`.
    LdRight,
    /// `p = h · L^d · σ(p)`.
    LdLeft,
}

impl SigmaOrdering {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::LdRight => "LdRight",
            Self::LdLeft => "LdLeft",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SigmaFactor {
    pub h: RationalFunction,
    pub ordering: SigmaOrdering,
    pub m_only: bool,
}

/// The `h` with `p = h · rhs`, if one scalar works for every `L`-power.
fn common_ratio(p: &QTElem<MultiPoly>, rhs: &QTElem<MultiPoly>) -> Option<RationalFunction> {
    let same_support = p.terms().map(|(j, _)| j).eq(rhs.terms().map(|(j, _)| j));
    if !same_support {
        return None;
    }
    let mut ratio: Option<RationalFunction> = None;
    for ((_, a), (_, b)) in p.terms().zip(rhs.terms()) {
        let q = RationalFunction::new(a.clone(), b.clone()).ok()?;
        match &ratio {
            None => ratio = Some(q),
            Some(r) if *r == q => {}
            Some(_) => return None,
        }
    }
    ratio
}

/// Looks for `h(t, M)` relating `p` to `σ(p)`, trying `σ(p) L^d` first and
/// then `L^d σ(p)`. `p` must have `L`-exponents from `0` to `d`; anything
/// else, or no consistent `h`, gives `None`.
pub fn sigma_symmetry_factor(p: &QTElem<MultiPoly>) -> Option<SigmaFactor> {
    if p.min_l()? != 0 {
        return None;
    }
    let d = p.max_l()?;
    let sp = p.sigma();
    let ld = QTElem::l_pow(d);
    [(SigmaOrdering::LdRight, &sp * &ld), (SigmaOrdering::LdLeft, &ld * &sp)]
        .into_iter()
        .find_map(|(ordering, rhs)| common_ratio(p, &rhs).map(|h| SigmaFactor { m_only: is_m_only(&h), h, ordering }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qtorus::{alpha_unknot, tm};

    fn rf(s: &str) -> RationalFunction {
        RationalFunction::from_poly(tm(s).unwrap())
    }

    #[test]
    fn unknot_needs_the_left_ordering() {
        let f = sigma_symmetry_factor(&alpha_unknot()).unwrap();
        assert_eq!(f.ordering, SigmaOrdering::LdLeft);
        assert_eq!(f.h, rf("t^2*M^2"));
        assert!(!f.m_only);
    }

    #[test]
    fn small_cases() {
        let f = sigma_symmetry_factor(&QTElem::parse("L - 1").unwrap()).unwrap();
        assert_eq!(f.h, rf("-1"));
        assert!(f.m_only);
        let f = sigma_symmetry_factor(&QTElem::parse("M").unwrap()).unwrap();
        assert_eq!(f.h, rf("M^2"));
        assert_eq!(sigma_symmetry_factor(&QTElem::parse("L + M").unwrap()).unwrap().h, rf("M"));
        assert!(sigma_symmetry_factor(&QTElem::parse("L + M + 1").unwrap()).is_none());
        assert!(sigma_symmetry_factor(&QTElem::parse("L^-1 + 1").unwrap()).is_none());
    }
}
