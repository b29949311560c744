//! Canonical text form: terms in graded-lexicographic order, highest total
//! degree first, e.g. `-x*y*z^2 + x^2*z + y^2*z + z^3 - x*y + x - 3*z`.

use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::iter::Peekable;
use core::str::Chars;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{MultiPoly, PolyError, Rational};

impl MultiPoly {
    /// Terms sorted for display: total degree descending, then exponent
    /// vectors in descending lexicographic order.
    pub fn graded_terms(&self) -> Vec<(&[i32], &Rational)> {
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: i32 = a.iter().sum();
            let db: i32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        terms
    }

    fn monomial_text(&self, exp: &[i32]) -> String {
        let mut parts = Vec::new();
        for (v, e) in self.vars().iter().zip(exp) {
            match *e {
                0 => {}
                1 => parts.push(v.clone()),
                k => parts.push(format!("{v}^{k}")),
            }
        }
        parts.join("*")
    }

    /// Parses the canonical text form (any term order is accepted).
    ///
    /// Variables that appear with a negative exponent are flagged Laurent.
    pub fn parse(vars: &[&str], text: &str) -> Result<Self, PolyError> {
        let mut parser = Parser { chars: text.chars().peekable(), vars };
        let terms = parser.polynomial()?;
        let mut laurent: Vec<&str> = Vec::new();
        for (exp, _) in &terms {
            for (i, e) in exp.iter().enumerate() {
                if *e < 0 && !laurent.contains(&vars[i]) {
                    laurent.push(vars[i]);
                }
            }
        }
        MultiPoly::from_terms(vars, &laurent, terms)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (exp, c)) in self.graded_terms().into_iter().enumerate() {
            let mono = self.monomial_text(exp);
            let negative = c.is_negative();
            let magnitude = c.abs();
            let body = if mono.is_empty() {
                format!("{magnitude}")
            } else if magnitude.is_one() {
                mono
            } else {
                format!("{magnitude}*{mono}")
            };
            match (i, negative) {
                (0, false) => f.write_str(&body)?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

struct Parser<'a, 'v> {
    chars: Peekable<Chars<'a>>,
    vars: &'v [&'v str],
}

type Term = (Vec<i32>, Rational);

impl Parser<'_, '_> {
    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().copied()
    }

    fn polynomial(&mut self) -> Result<Vec<Term>, PolyError> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Some('-') => {
                self.chars.next();
                -1
            }
            Some('+') => {
                self.chars.next();
                1
            }
            None => return Err(PolyError::Parse("empty input".to_owned())),
            _ => 1,
        };
        loop {
            let (exp, c) = self.term()?;
            terms.push((exp, if sign < 0 { -c } else { c }));
            match self.peek() {
                None => break,
                Some('+') => {
                    self.chars.next();
                    sign = 1;
                }
                Some('-') => {
                    self.chars.next();
                    sign = -1;
                }
                Some(other) => {
                    return Err(PolyError::Parse(format!("unexpected `{other}`")));
                }
            }
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<Term, PolyError> {
        let mut exp = vec![0i32; self.vars.len()];
        let mut coeff = Rational::one();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = self.integer()?;
                    let value = if self.peek() == Some('/') {
                        self.chars.next();
                        let den = self.integer()?;
                        if den == BigInt::from(0) {
                            return Err(PolyError::Parse("zero denominator".to_owned()));
                        }
                        Rational::new(num, den)
                    } else {
                        Rational::from_integer(num)
                    };
                    coeff *= value;
                }
                Some(c) if c.is_alphabetic() || c == '_' => {
                    let name = self.identifier();
                    let idx = self
                        .vars
                        .iter()
                        .position(|v| *v == name)
                        .ok_or_else(|| PolyError::UnknownVariable(name.clone()))?;
                    let mut power = 1i32;
                    if self.peek() == Some('^') {
                        self.chars.next();
                        let negative = if self.peek() == Some('-') {
                            self.chars.next();
                            true
                        } else {
                            false
                        };
                        let k = self.integer()?;
                        let k: i32 =
                            i32::try_from(k).map_err(|_| PolyError::Parse("exponent out of range".to_owned()))?;
                        power = if negative { -k } else { k };
                    }
                    exp[idx] += power;
                }
                other => {
                    return Err(PolyError::Parse(format!("expected a coefficient or variable, found {other:?}")));
                }
            }
            if self.peek() == Some('*') {
                self.chars.next();
            } else {
                return Ok((exp, coeff));
            }
        }
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let mut digits = String::new();
        while let Some(c) = self.chars.peek().copied().filter(char::is_ascii_digit) {
            digits.push(c);
            self.chars.next();
        }
        if digits.is_empty() {
            return Err(PolyError::Parse("expected digits".to_owned()));
        }
        digits.parse::<BigInt>().map_err(|e| PolyError::Parse(format!("{e}")))
    }

    fn identifier(&mut self) -> String {
        let mut name = String::new();
        while let Some(c) = self.chars.peek().copied().filter(|c| c.is_alphanumeric() || *c == '_') {
            name.push(c);
            self.chars.next();
        }
        name
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn canonical_order() {
        let vars = ["x", "y", "z"];
        let p = MultiPoly::parse(&vars, "x - x*y + (-3)*z").ok();
        assert!(p.is_none(), "parentheses are not part of the grammar");
        let p = MultiPoly::parse(&vars, "x - x*y - 3*z + x^2*z + y^2*z - x*y*z^2 + z^3").unwrap();
        assert_eq!(p.to_string(), "-x*y*z^2 + x^2*z + y^2*z + z^3 - x*y + x - 3*z");
    }

    #[test]
    fn rationals_and_laurent() {
        let p = MultiPoly::parse(&["t", "M"], "-1/2*t^-2*M + 3/4").unwrap();
        assert!(p.is_laurent("t"));
        assert!(!p.is_laurent("M"));
        assert_eq!(p.to_string(), "3/4 - 1/2*t^-2*M");
        let back = MultiPoly::parse(&["t", "M"], &p.to_string()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn rejects_garbage() {
        assert!(MultiPoly::parse(&["x"], "").is_err());
        assert!(MultiPoly::parse(&["x"], "q").is_err());
        assert!(MultiPoly::parse(&["x"], "x +").is_err());
        assert!(MultiPoly::parse(&["x"], "1/0").is_err());
    }

    #[test]
    fn zero_and_constants() {
        assert_eq!(MultiPoly::zero(&["x"]).to_string(), "0");
        assert_eq!(MultiPoly::parse(&["x"], "x - x").unwrap().to_string(), "0");
        assert_eq!(MultiPoly::parse(&["x"], "-7").unwrap().to_string(), "-7");
    }
}
