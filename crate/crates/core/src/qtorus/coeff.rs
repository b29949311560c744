use alloc::vec::Vec;
use core::fmt;

use crate::exactpoly::{rat, MultiPoly, PolyError, RationalFunction};

/// Variables of the coefficient ring, both Laurent.
pub const TM: [&str; 2] = ["t", "M"];

/// Parses a Laurent polynomial in `t, M`.
pub fn tm(text: &str) -> Result<MultiPoly, PolyError> {
    Ok(MultiPoly::parse(&TM, text)?.with_laurent(&TM))
}

/// Brings any polynomial in (a subset of) `t, M` onto the standard variable
/// list with both variables Laurent.
pub fn to_tm(p: &MultiPoly) -> Result<MultiPoly, PolyError> {
    Ok(p.aligned_str(&TM)?.with_laurent(&TM))
}

fn map_exponents(p: &MultiPoly, f: impl Fn(i32, i32) -> (i32, i32)) -> MultiPoly {
    let p = to_tm(p).expect("coefficients live in t, M");
    let terms = p.terms().map(|(e, c)| {
        let (a, b) = f(e[0], e[1]);
        (alloc::vec![a, b], c.clone())
    });
    MultiPoly::from_terms(&TM, &TM, terms).expect("Laurent in both variables")
}

/// Coefficient rings of the quantum torus: commutative, with the two ring
/// automorphisms the torus needs, `M ↦ t^{2k} M` and `M ↦ M⁻¹`.
pub trait TorusCoeff: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn twist(&self, k: i32) -> Self;
    fn invert_m(&self) -> Self;
}

impl TorusCoeff for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero(&TM).with_laurent(&TM)
    }
    fn one() -> Self {
        MultiPoly::from_int(&TM, 1).with_laurent(&TM)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn twist(&self, k: i32) -> Self {
        map_exponents(self, |a, b| (a + 2 * k * b, b))
    }
    fn invert_m(&self) -> Self {
        map_exponents(self, |a, b| (a, -b))
    }
}

/// `(1+t)`-adic valuation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Height {
    Finite(u32),
    Infinite,
}

/// An element `f/g` of `Q(t, M)` with `g` not divisible by `1 + t`, i.e. the
/// localization of `Q[t^±1, M^±1]` at the prime `(1 + t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedScalar(RationalFunction);

fn vanishes_at_minus_one(p: &MultiPoly) -> bool {
    to_tm(p).and_then(|q| q.eval_at("t", &rat(-1))).map(|q| q.is_zero()).expect("t is a variable")
}

impl LocalizedScalar {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, PolyError> {
        Self::from_fraction(RationalFunction::new(to_tm(&num)?, to_tm(&den)?)?)
    }

    pub fn from_fraction(f: RationalFunction) -> Result<Self, PolyError> {
        if vanishes_at_minus_one(f.denom()) {
            return Err(PolyError::Unsupported("denominator vanishes at t = -1".into()));
        }
        Ok(Self(f))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        Self(RationalFunction::from_poly(to_tm(&p).expect("coefficients live in t, M")))
    }

    pub fn fraction(&self) -> &RationalFunction {
        &self.0
    }

    pub fn height(&self) -> Height {
        height_of(self.0.numer())
    }

    /// Quotient inside the local ring; fails when it would leave it.
    pub fn checked_div(&self, other: &Self) -> Result<Self, PolyError> {
        Self::from_fraction(self.0.checked_div(&other.0)?)
    }

    fn map(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> Self {
        let num = f(self.0.numer());
        let den = f(self.0.denom());
        Self(RationalFunction::new(num, den).expect("automorphisms keep the denominator non-zero"))
    }
}

impl fmt::Display for LocalizedScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TorusCoeff for LocalizedScalar {
    fn zero() -> Self {
        Self::from_poly(<MultiPoly as TorusCoeff>::zero())
    }
    fn one() -> Self {
        Self::from_poly(<MultiPoly as TorusCoeff>::one())
    }
    fn add(&self, other: &Self) -> Self {
        Self(&self.0 + &other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        Self(&self.0 - &other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0)
    }
    fn neg(&self) -> Self {
        Self(-&self.0)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    // Both automorphisms fix t, so they preserve the (1 + t)-adic valuation
    // and keep denominators admissible.
    fn twist(&self, k: i32) -> Self {
        self.map(|p| p.twist(k))
    }
    fn invert_m(&self) -> Self {
        self.map(|p| p.invert_m())
    }
}

/// Multiplicity of `1 + t` in a Laurent polynomial in `t, M`. Powers of `t`
/// are units, so the polynomial is first shifted to non-negative exponents;
/// `1 + t` is monic in `t`, so it divides exactly when `t = −1` kills the
/// polynomial.
pub fn height_of(p: &MultiPoly) -> Height {
    let p = to_tm(p).expect("coefficients live in t, M");
    if p.is_zero() {
        return Height::Infinite;
    }
    let shift: Vec<i32> = p.min_exponents().iter().map(|e| -e).collect();
    let mut q = p.shift(&shift);
    let one_plus_t = tm("1 + t").expect("literal");
    let mut k = 0;
    while vanishes_at_minus_one(&q) {
        q = q.div_exact(&one_plus_t).expect("t = -1 is a root");
        k += 1;
    }
    Height::Finite(k)
}

/// `true` when the rational function involves `M` only.
pub fn is_m_only(f: &RationalFunction) -> bool {
    let free_of_t = |p: &MultiPoly| to_tm(p).map(|q| q.terms().all(|(e, _)| e[0] == 0)).unwrap_or(false);
    free_of_t(f.numer()) && free_of_t(f.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heights() {
        assert_eq!(height_of(&tm("1").unwrap()), Height::Finite(0));
        let p = &(&tm("M").unwrap() * &tm("1 + 2*t + t^2").unwrap()) + &tm("1 + 3*t + 3*t^2 + t^3").unwrap();
        assert_eq!(height_of(&p), Height::Finite(2));
        assert_eq!(height_of(&tm("1 - t^2").unwrap()), Height::Finite(1));
        assert_eq!(height_of(&tm("M - 1").unwrap()), Height::Finite(0));
        assert_eq!(height_of(&tm("t^-3 + t^-2").unwrap()), Height::Finite(1));
        assert_eq!(height_of(&tm("0").unwrap()), Height::Infinite);
    }

    #[test]
    fn automorphisms() {
        let p = tm("t*M^2 - M^-1").unwrap();
        assert_eq!(p.twist(1), tm("t^5*M^2 - t^-2*M^-1").unwrap());
        assert_eq!(p.invert_m(), tm("t*M^-2 - M").unwrap());
        assert_eq!(p.twist(2).twist(-2), p);
    }

    #[test]
    fn localized_denominators() {
        assert!(LocalizedScalar::new(tm("1").unwrap(), tm("1 + t").unwrap()).is_err());
        let s = LocalizedScalar::new(tm("1 - t^2").unwrap(), tm("1 - t").unwrap()).unwrap();
        assert_eq!(s.height(), Height::Finite(1));
        let unit = LocalizedScalar::new(tm("M").unwrap(), tm("2 - t").unwrap()).unwrap();
        assert!(unit.checked_div(&s).is_err());
        assert!(s.checked_div(&unit).is_ok());
    }
}
