use alloc::borrow::ToOwned;
use core::fmt;

use super::{rat, MultiPoly, PolyError, RationalFunction};

/// Minimal commutative-ring interface for matrix entries.
pub trait RingElem: Clone + PartialEq {
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    fn ring_is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
}

impl RingElem for MultiPoly {
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn zero_like(&self) -> Self {
        MultiPoly::zero_like(self)
    }
    fn one_like(&self) -> Self {
        MultiPoly::one_like(self)
    }
}

impl RingElem for RationalFunction {
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn zero_like(&self) -> Self {
        self.constant_like(rat(0))
    }
    fn one_like(&self) -> Self {
        self.constant_like(rat(1))
    }
}

/// 2x2 matrix `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix2<T> {
    pub entries: [[T; 2]; 2],
}

impl<T: RingElem> Matrix2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Self { entries: [[a, b], [c, d]] }
    }

    pub fn identity(like: &T) -> Self {
        Self::new(like.one_like(), like.zero_like(), like.zero_like(), like.one_like())
    }

    pub fn scalar(s: T) -> Self {
        let z = s.zero_like();
        Self::new(s.clone(), z.clone(), z, s)
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.entries[row][col]
    }

    pub fn map<U: RingElem>(&self, f: impl Fn(&T) -> U) -> Matrix2<U> {
        let [[a, b], [c, d]] = &self.entries;
        Matrix2::new(f(a), f(b), f(c), f(d))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let [[a, b], [c, d]] = &self.entries;
        let [[e, f], [g, h]] = &other.entries;
        Self::new(
            a.ring_mul(e).ring_add(&b.ring_mul(g)),
            a.ring_mul(f).ring_add(&b.ring_mul(h)),
            c.ring_mul(e).ring_add(&d.ring_mul(g)),
            c.ring_mul(f).ring_add(&d.ring_mul(h)),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, T::ring_add)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, T::ring_sub)
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.ring_mul(s))
    }

    fn zip(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        let [[a, b], [c, d]] = &self.entries;
        let [[e, g], [h, k]] = &other.entries;
        Self::new(f(a, e), f(b, g), f(c, h), f(d, k))
    }

    pub fn det(&self) -> T {
        let [[a, b], [c, d]] = &self.entries;
        a.ring_mul(d).ring_sub(&b.ring_mul(c))
    }

    pub fn trace(&self) -> T {
        self.entries[0][0].ring_add(&self.entries[1][1])
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(T::ring_is_zero)
    }

    /// Inverse of a determinant-one matrix, `[[d, -b], [-c, a]]`.
    pub fn inverse_unimodular(&self) -> Result<Self, PolyError> {
        let det = self.det();
        if det != det.one_like() {
            return Err(PolyError::Unsupported("determinant is not 1".to_owned()));
        }
        let [[a, b], [c, d]] = &self.entries;
        Ok(Self::new(d.clone(), b.ring_neg(), c.ring_neg(), a.clone()))
    }

    /// Integer power; negative exponents need determinant one.
    pub fn pow(&self, k: i64) -> Result<Self, PolyError> {
        let base = if k < 0 { self.inverse_unimodular()? } else { self.clone() };
        let mut out = Self::identity(&self.entries[0][0]);
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }
}

impl<T: fmt::Display> fmt::Display for Matrix2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.entries;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(&["u", "v"], s).unwrap()
    }

    #[test]
    fn unit_determinant_and_inverse() {
        let a = Matrix2::new(p("u"), p("1"), p("u*v - 1"), p("v"));
        assert!(a.det().is_one());
        let inv = a.inverse_unimodular().unwrap();
        assert_eq!(a.mul(&inv), Matrix2::identity(&p("1")));
        assert_eq!(a.pow(-2).unwrap().mul(&a.pow(2).unwrap()), Matrix2::identity(&p("1")));
        let b = Matrix2::new(p("2"), p("0"), p("0"), p("1"));
        assert!(b.inverse_unimodular().is_err());
        assert_eq!(b.pow(3).unwrap().get(0, 0), &p("8"));
    }
}
