use crate::exactpoly::{rat, MultiPoly};

use super::word::{FreeWord, Generator};

/// The three coordinate functions `x = tr A`, `y = tr B`, `z = tr AB`, given
/// as polynomials over a common variable list. Usually these are just the
/// variables `x, y, z`; the two-bridge code passes `y = x` instead so that
/// traces come out directly in `(x, z)`.
#[derive(Clone, Debug)]
pub struct TraceCoords {
    pub x: MultiPoly,
    pub y: MultiPoly,
    pub z: MultiPoly,
}

impl TraceCoords {
    pub fn standard() -> Self {
        let v = ["x", "y", "z"];
        Self { x: MultiPoly::var(&v, "x"), y: MultiPoly::var(&v, "y"), z: MultiPoly::var(&v, "z") }
    }

    /// Coordinates for words in two conjugate generators (`tr A = tr B`).
    pub fn meridional() -> Self {
        let v = ["x", "z"];
        let x = MultiPoly::var(&v, "x");
        Self { y: x.clone(), x, z: MultiPoly::var(&v, "z") }
    }
}

/// `α·1 + β·A + γ·B + δ·AB` in the algebra spanned by a pair of 2x2
/// unimodular matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadBasisElem {
    pub alpha: MultiPoly,
    pub beta: MultiPoly,
    pub gamma: MultiPoly,
    pub delta: MultiPoly,
}

impl QuadBasisElem {
    pub fn one(coords: &TraceCoords) -> Self {
        let zero = coords.x.zero_like();
        Self { alpha: zero.one_like(), beta: zero.clone(), gamma: zero.clone(), delta: zero }
    }

    pub fn trace(&self, c: &TraceCoords) -> MultiPoly {
        &(&(&self.alpha.scale(&rat(2)) + &(&c.x * &self.beta)) + &(&c.y * &self.gamma)) + &(&c.z * &self.delta)
    }

    /// Left multiplication by `A`:
    /// `A·1 = A`, `A·A = xA − 1`, `A·B = AB`, `A·AB = x·AB − B`.
    fn left_a(&self, c: &TraceCoords) -> Self {
        Self {
            alpha: -&self.beta,
            beta: &self.alpha + &(&c.x * &self.beta),
            gamma: -&self.delta,
            delta: &self.gamma + &(&c.x * &self.delta),
        }
    }

    /// Left multiplication by `B`:
    /// `B·1 = B`, `B·A = yA + xB + (z − xy) − AB`, `B·B = yB − 1`,
    /// `B·AB = A + zB − x`.
    fn left_b(&self, c: &TraceCoords) -> Self {
        let zxy = &c.z - &(&c.x * &c.y);
        Self {
            alpha: &(&(&zxy * &self.beta) - &self.gamma) - &(&c.x * &self.delta),
            beta: &(&c.y * &self.beta) + &self.delta,
            gamma: &(&(&self.alpha + &(&c.x * &self.beta)) + &(&c.y * &self.gamma)) + &(&c.z * &self.delta),
            delta: -&self.beta,
        }
    }

    fn scaled_sub(&self, t: &MultiPoly, other: &Self) -> Self {
        Self {
            alpha: &(t * &self.alpha) - &other.alpha,
            beta: &(t * &self.beta) - &other.beta,
            gamma: &(t * &self.gamma) - &other.gamma,
            delta: &(t * &self.delta) - &other.delta,
        }
    }

    /// Left multiplication by one letter `g^{±1}`, with `g⁻¹ = tr(g) − g`.
    pub fn left_mul(&self, g: Generator, sign: i32, c: &TraceCoords) -> Self {
        let prod = match g {
            Generator::First => self.left_a(c),
            Generator::Second => self.left_b(c),
        };
        if sign > 0 {
            return prod;
        }
        let tr = match g {
            Generator::First => &c.x,
            Generator::Second => &c.y,
        };
        self.scaled_sub(tr, &prod)
    }
}

/// Expresses the word as an element of the span of `{1, A, B, AB}`, folding
/// letters in from the right.
pub fn fold_word(word: &FreeWord, coords: &TraceCoords) -> QuadBasisElem {
    let mut acc = QuadBasisElem::one(coords);
    for (g, s) in word.letters().into_iter().rev() {
        acc = acc.left_mul(g, s, coords);
    }
    acc
}

/// Trace polynomial of a word in `x, y, z`.
pub fn trace_poly(word: &FreeWord) -> MultiPoly {
    trace_poly_in(word, &TraceCoords::standard())
}

pub fn trace_poly_in(word: &FreeWord, coords: &TraceCoords) -> MultiPoly {
    fold_word(word, coords).trace(coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tp(s: &str) -> MultiPoly {
        trace_poly(&FreeWord::parse(s, ["a", "b"]).unwrap())
    }

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(&["x", "y", "z"], s).unwrap()
    }

    #[test]
    fn short_words() {
        assert_eq!(tp(""), p("2"));
        assert_eq!(tp("a"), p("x"));
        assert_eq!(tp("b"), p("y"));
        assert_eq!(tp("a b"), p("z"));
        assert_eq!(tp("b a"), p("z"));
        assert_eq!(tp("a b^-1"), p("x*y - z"));
        assert_eq!(tp("a^-1"), p("x"));
        assert_eq!(tp("a^2"), p("x^2 - 2"));
    }

    #[test]
    fn commutator_and_cube() {
        assert_eq!(tp("a b a^-1 b^-1"), p("x^2 + y^2 + z^2 - x*y*z - 2"));
        assert_eq!(tp("a b a b a b"), p("z^3 - 3*z"));
    }

    #[test]
    fn folding_is_multiplicative() {
        let c = TraceCoords::standard();
        let names = ["a", "b"];
        for e in ["", "a", "b", "a b", "b^-1 a^2"] {
            let ew = FreeWord::parse(e, names).unwrap();
            let two_steps = fold_word(&ew, &c).left_mul(Generator::Second, 1, &c).left_mul(Generator::First, 1, &c);
            let whole = fold_word(&(&FreeWord::parse("a b", names).unwrap() * &ew), &c);
            assert_eq!(two_steps, whole, "{e}");
        }
    }
}
