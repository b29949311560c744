use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::sl2trace::{FreeWord, Generator};

use super::TwoBridgeError;

/// The two-bridge knot `b(p, m)` with `p ≥ 3` odd, `0 < m < p` odd and
/// `gcd(p, m) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoBridgeKnot {
    p: u32,
    m: u32,
}

impl TwoBridgeKnot {
    pub fn new(p: u32, m: u32) -> Result<Self, TwoBridgeError> {
        let bad = |why: &str| Err(TwoBridgeError::InvalidKnot(format!("b({p},{m}): {why}")));
        if p < 3 || p.is_multiple_of(2) {
            return bad("p must be an odd integer at least 3");
        }
        if m == 0 || m >= p || m.is_multiple_of(2) {
            return bad("m must be odd with 0 < m < p");
        }
        if p.gcd(&m) != 1 {
            return bad("p and m must be coprime");
        }
        Ok(Self { p, m })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `d = (p − 1)/2`, the `z`-degree of the defining polynomial.
    pub fn d(&self) -> u32 {
        (self.p - 1) / 2
    }

    /// `c = (m − 1)/2`.
    pub fn c(&self) -> u32 {
        (self.m - 1) / 2
    }

    /// Every valid knot with `p ≤ max_p`, ordered by `(p, m)`.
    pub fn all_up_to(max_p: u32) -> Vec<Self> {
        let mut out = Vec::new();
        for p in (3..=max_p).step_by(2) {
            for m in (1..p).step_by(2) {
                if let Ok(k) = Self::new(p, m) {
                    out.push(k);
                }
            }
        }
        out
    }

    pub fn label(&self) -> String {
        format!("b({},{})", self.p, self.m)
    }
}

impl fmt::Display for TwoBridgeKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b({},{})", self.p, self.m)
    }
}

/// `ε_j = (−1)^⌊jm/p⌋` for `j = 1, …, p − 1` (stored at index `j − 1`).
pub fn epsilon_sequence(k: &TwoBridgeKnot) -> Vec<i32> {
    (1..k.p).map(|j| if (j * k.m / k.p).is_multiple_of(2) { 1 } else { -1 }).collect()
}

/// The relator word `a^{ε_1} b^{ε_2} ⋯ a^{ε_{p−2}} b^{ε_{p−1}}` as a list of
/// unit letters. Adjacent letters alternate generators, so the list is
/// already freely reduced.
pub fn word_letters(k: &TwoBridgeKnot) -> Vec<(Generator, i32)> {
    epsilon_sequence(k)
        .into_iter()
        .enumerate()
        .map(|(i, e)| {
            let g = if i % 2 == 0 { Generator::First } else { Generator::Second };
            (g, e)
        })
        .collect()
}

pub fn word_w(k: &TwoBridgeKnot) -> FreeWord {
    FreeWord::new(word_letters(k))
}

/// `w^{(j)}`: the word with `j` letters removed from each end.
pub fn trimmed_word(k: &TwoBridgeKnot, j: u32) -> FreeWord {
    let letters = word_letters(k);
    let j = j as usize;
    if 2 * j >= letters.len() {
        return FreeWord::identity();
    }
    FreeWord::new(letters[j..letters.len() - j].iter().copied())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn epsilon_examples() {
        let k = |p, m| TwoBridgeKnot::new(p, m).unwrap();
        assert_eq!(epsilon_sequence(&k(3, 1)), vec![1, 1]);
        assert_eq!(epsilon_sequence(&k(5, 3)), vec![1, -1, -1, 1]);
        assert_eq!(epsilon_sequence(&k(5, 1)), vec![1, 1, 1, 1]);
    }

    #[test]
    fn epsilon_is_palindromic() {
        for knot in TwoBridgeKnot::all_up_to(45) {
            let e = epsilon_sequence(&knot);
            let rev: Vec<i32> = e.iter().rev().copied().collect();
            assert_eq!(e, rev, "{knot}");
        }
    }

    #[test]
    fn words() {
        let names = ["a", "b"];
        let k = |p, m| TwoBridgeKnot::new(p, m).unwrap();
        assert_eq!(word_w(&k(3, 1)).to_text(names), "a b");
        assert_eq!(word_w(&k(5, 3)).to_text(names), "a b^-1 a^-1 b");
        assert_eq!(word_w(&k(7, 1)).to_text(names), "a b a b a b");
        assert_eq!(trimmed_word(&k(5, 3), 1).to_text(names), "b^-1 a^-1");
        assert!(trimmed_word(&k(5, 3), 2).is_identity());
    }

    #[test]
    fn invalid_knots() {
        assert!(TwoBridgeKnot::new(4, 1).is_err());
        assert!(TwoBridgeKnot::new(9, 3).is_err());
        assert!(TwoBridgeKnot::new(7, 2).is_err());
        assert!(TwoBridgeKnot::new(7, 7).is_err());
        assert!(TwoBridgeKnot::new(1, 1).is_err());
    }
}
