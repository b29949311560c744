use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::exactpoly::{rat, MultiPoly, PolyError};

use super::coeff::{to_tm, TorusCoeff, TM};

/// `Σ_j a_j L^j` with every coefficient written to the left of `L`.
#[derive(Clone, Debug, PartialEq)]
pub struct QTElem<C> {
    terms: BTreeMap<i32, C>,
}

pub const ML: [&str; 2] = ["M", "L"];

impl<C: TorusCoeff> QTElem<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::scalar(C::one())
    }

    pub fn scalar(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// `c L^j`.
    pub fn monomial(c: C, j: i32) -> Self {
        let mut out = Self::zero();
        out.add_term(j, c);
        out
    }

    pub fn l_pow(j: i32) -> Self {
        Self::monomial(C::one(), j)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, C)>) -> Self {
        let mut out = Self::zero();
        for (j, c) in terms {
            out.add_term(j, c);
        }
        out
    }

    fn add_term(&mut self, j: i32, c: C) {
        let sum = match self.terms.remove(&j) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(j, sum);
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &C)> + '_ {
        self.terms.iter().map(|(j, c)| (*j, c))
    }

    pub fn coeff(&self, j: i32) -> C {
        self.terms.get(&j).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_l(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_l(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.terms.values().next_back()
    }

    /// `a(M) L^k · b(M) L^l = a(M) b(t^{2k} M) L^{k+l}`.
    pub fn qt_mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (k, a) in &self.terms {
            for (l, b) in &other.terms {
                out.add_term(k + l, a.mul(&b.twist(*k)));
            }
        }
        out
    }

    /// `M^k L^l ↦ M^{−k} L^{−l}`, linear over `t`.
    pub fn sigma(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(j, c)| (-j, c.invert_m())))
    }

    /// Left multiplication by a scalar.
    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(j, a)| (*j, c.mul(a))))
    }

    pub fn map_coeffs<D: TorusCoeff>(&self, f: impl Fn(&C) -> D) -> QTElem<D> {
        QTElem::from_terms(self.terms.iter().map(|(j, c)| (*j, f(c))))
    }
}

impl QTElem<MultiPoly> {
    /// Parses `Σ (coefficient)*L^j` written with `L` as a third variable;
    /// every monomial is read with its `M`-part to the left of `L`.
    pub fn parse(text: &str) -> Result<Self, PolyError> {
        let p = MultiPoly::parse(&["t", "M", "L"], text)?;
        let mut out = Self::zero();
        for (e, c) in p.terms() {
            let coeff = MultiPoly::from_terms(&TM, &TM, [(alloc::vec![e[0], e[1]], c.clone())])?;
            out.add_term(e[2], coeff);
        }
        Ok(out)
    }

    /// Coefficients aligned onto `t, M` (for values built elsewhere).
    pub fn from_poly_terms(terms: impl IntoIterator<Item = (i32, MultiPoly)>) -> Result<Self, PolyError> {
        let aligned: Result<Vec<_>, _> = terms.into_iter().map(|(j, c)| Ok((j, to_tm(&c)?))).collect();
        Ok(Self::from_terms(aligned?))
    }

    /// Specialization `t = −1`, landing in the commutative Laurent ring in
    /// `M, L`.
    pub fn epsilon(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(&ML).with_laurent(&ML);
        for (j, c) in &self.terms {
            let at = c.eval_at("t", &rat(-1)).expect("t is a variable");
            for (e, coeff) in at.terms() {
                let mono = MultiPoly::from_terms(&ML, &ML, [(alloc::vec![e[1], *j], coeff.clone())])
                    .expect("Laurent in both variables");
                out = &out + &mono;
            }
        }
        out
    }
}

/// `(−1)^{k+l} t^{kl} (M^k L^l + M^{−k} L^{−l})`, the image of the torus
/// curve of slope `(k, l)`.
pub fn upsilon(k: i32, l: i32) -> QTElem<MultiPoly> {
    let sign = if (k + l).rem_euclid(2) == 0 { 1 } else { -1 };
    let c = |mk: i32| MultiPoly::from_terms(&TM, &TM, [(alloc::vec![k * l, mk], rat(sign))]).expect("Laurent");
    QTElem::from_terms([(l, c(k)), (-l, c(-k))])
}

impl<C: TorusCoeff> fmt::Display for QTElem<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (j, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match *j {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*L")?,
                _ => write!(f, "({c})*L^{j}")?,
            }
        }
        Ok(())
    }
}

impl<C: TorusCoeff> Add for &QTElem<C> {
    type Output = QTElem<C>;
    fn add(self, rhs: &QTElem<C>) -> QTElem<C> {
        let mut out = self.clone();
        for (j, c) in &rhs.terms {
            out.add_term(*j, c.clone());
        }
        out
    }
}

impl<C: TorusCoeff> Neg for &QTElem<C> {
    type Output = QTElem<C>;
    fn neg(self) -> QTElem<C> {
        QTElem::from_terms(self.terms.iter().map(|(j, c)| (*j, c.neg())))
    }
}

impl<C: TorusCoeff> Sub for &QTElem<C> {
    type Output = QTElem<C>;
    fn sub(self, rhs: &QTElem<C>) -> QTElem<C> {
        self + &(-rhs)
    }
}

impl<C: TorusCoeff> Mul for &QTElem<C> {
    type Output = QTElem<C>;
    fn mul(self, rhs: &QTElem<C>) -> QTElem<C> {
        self.qt_mul(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QTElem<MultiPoly> {
        QTElem::parse(s).unwrap()
    }

    #[test]
    fn commutation() {
        assert_eq!(&q("L") * &q("M"), q("t^2*M*L"));
        assert_eq!(&q("M") * &q("L"), q("M*L"));
        assert_eq!(&q("M*L") * &q("M*L"), q("t^2*M^2*L^2"));
        assert_eq!(&q("L^-1") * &q("M"), q("t^-2*M*L^-1"));
    }

    #[test]
    fn sigma_basics() {
        assert_eq!(q("M^2*L").sigma(), q("M^-2*L^-1"));
        assert_eq!(q("t^3").sigma(), q("t^3"));
    }

    #[test]
    fn upsilon_images() {
        assert_eq!(upsilon(1, 0), q("-M - M^-1"));
        assert_eq!(upsilon(0, 1), q("-L - L^-1"));
        assert_eq!(upsilon(1, 1), q("t*M*L + t*M^-1*L^-1"));
    }

    #[test]
    fn epsilon_basics() {
        let e = (&q("L") * &q("M")).epsilon();
        assert_eq!(e, MultiPoly::parse(&ML, "M*L").unwrap());
        assert_eq!(q("t").epsilon(), MultiPoly::from_int(&ML, -1));
    }
}
