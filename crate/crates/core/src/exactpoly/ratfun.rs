use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::{MultiPoly, PolyError, Rational};

/// Quotient of two polynomials in lowest terms.
///
/// Canonical form: numerator and denominator have no negative exponents and
/// no common factor, and the lexicographic leading coefficient of the
/// denominator is 1. Equality is therefore structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let one = p.one_like();
        Self::canonical(p, one)
    }

    pub fn constant_like(&self, c: Rational) -> Self {
        Self::from_poly(self.num.constant_like(c))
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some(p)` when the denominator is 1.
    pub fn as_poly(&self) -> Option<&MultiPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn recip(&self) -> Result<Self, PolyError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, PolyError> {
        if other.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(Self::canonical(&self.num * &other.den, &self.den * &other.num))
    }

    fn canonical(num: MultiPoly, den: MultiPoly) -> Self {
        let vars = num.union_vars(&den);
        let flags: Vec<bool> = vars.iter().map(|v| num.is_laurent(v) || den.is_laurent(v)).collect();
        let mut num = num.aligned(&vars).expect("union");
        let mut den = den.aligned(&vars).expect("union");
        num.set_flags(&flags);
        den.set_flags(&flags);
        if num.is_zero() {
            let one = den.one_like();
            return Self { num, den: one };
        }
        // Move every monomial factor to the side where its exponent is
        // non-negative.
        let sn = num.min_exponents();
        let sd = den.min_exponents();
        let mut shift_n = Vec::with_capacity(vars.len());
        let mut shift_d = Vec::with_capacity(vars.len());
        for (a, b) in sn.iter().zip(&sd) {
            let delta = a - b;
            shift_n.push(-a + delta.max(0));
            shift_d.push(-b + (-delta).max(0));
        }
        let num0 = num.shift(&shift_n);
        let den0 = den.shift(&shift_d);
        let g = num0.gcd(&den0).expect("denominator is non-zero");
        let num1 = num0.div_exact(&g).expect("gcd divides");
        let den1 = den0.div_exact(&g).expect("gcd divides");
        let lead = den1.leading_term().map(|(_, c)| c.clone()).expect("non-zero");
        let inv = num_traits::Inv::inv(lead);
        Self { num: num1.scale(&inv), den: den1.scale(&inv) }
    }

    /// Evaluates a variable at a rational value.
    pub fn eval_at(&self, var: &str, value: &Rational) -> Result<Self, PolyError> {
        let n = self.num.eval_at(var, value)?;
        let d = self.den.eval_at(var, value)?;
        Self::new(n, d)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::canonical(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::canonical(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl From<MultiPoly> for RationalFunction {
    fn from(p: MultiPoly) -> Self {
        Self::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(&["x", "z"], s).unwrap()
    }

    #[test]
    fn lowest_terms_and_sign() {
        let r = RationalFunction::new(p("x^2 - z^2"), p("-2*x - 2*z")).unwrap();
        assert_eq!(r.numer(), &p("-1/2*x + 1/2*z"));
        assert!(r.denom().is_one());
        assert!(RationalFunction::new(p("x"), p("0")).is_err());
    }

    #[test]
    fn witness_entry_determinant() {
        // x^2/4 + (x+z)(1 - x^2/4)/(x+z) = 1
        let a = RationalFunction::from_poly(p("1/4*x^2"));
        let b = RationalFunction::new(p("1 - 1/4*x^2"), p("x + z")).unwrap();
        let c = RationalFunction::from_poly(p("x + z"));
        let sum = &a + &(&b * &c);
        assert_eq!(sum, RationalFunction::from_poly(p("1")));
    }

    #[test]
    fn laurent_monomials_move_to_denominator() {
        let v = ["s", "u"];
        let n = MultiPoly::parse(&v, "s^-2*u + s^-1").unwrap();
        let r = RationalFunction::from_poly(n);
        assert_eq!(r.numer(), &MultiPoly::parse(&v, "u + s").unwrap());
        assert_eq!(r.denom(), &MultiPoly::parse(&v, "s^2").unwrap());
        let back = RationalFunction::new(MultiPoly::parse(&v, "u + s").unwrap(), MultiPoly::parse(&v, "s^2").unwrap())
            .unwrap();
        assert_eq!(r, back);
        let q = r.checked_div(&r).unwrap();
        assert_eq!(q, r.constant_like(rat(1)));
    }
}
