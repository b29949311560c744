use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    First,
    Second,
}

impl Generator {
    pub fn other(self) -> Self {
        match self {
            Generator::First => Generator::Second,
            Generator::Second => Generator::First,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordParseError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("bad exponent in `{0}`")]
    BadExponent(String),
}

/// Element of the free group on two generators, stored as syllables
/// `(generator, exponent)`. Always freely reduced: no zero exponents and no
/// two adjacent syllables on the same generator.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    syllables: Vec<(Generator, i32)>,
}

impl FreeWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(syllables: impl IntoIterator<Item = (Generator, i32)>) -> Self {
        let mut out: Vec<(Generator, i32)> = Vec::new();
        for (g, e) in syllables {
            push_reduced(&mut out, g, e);
        }
        Self { syllables: out }
    }

    pub fn letter(g: Generator, e: i32) -> Self {
        Self::new([(g, e)])
    }

    /// Reduces an arbitrary syllable list. [`FreeWord::new`] already does
    /// this; the function exists for callers holding raw syllables.
    pub fn reduce(syllables: &[(Generator, i32)]) -> Self {
        Self::new(syllables.iter().copied())
    }

    pub fn syllables(&self) -> &[(Generator, i32)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Word length: the sum of absolute exponents.
    pub fn len(&self) -> usize {
        self.syllables.iter().map(|(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// The word spelled one letter at a time, each exponent `±1`.
    pub fn letters(&self) -> Vec<(Generator, i32)> {
        let mut out = Vec::with_capacity(self.len());
        for &(g, e) in &self.syllables {
            for _ in 0..e.unsigned_abs() {
                out.push((g, e.signum()));
            }
        }
        out
    }

    pub fn reverse(&self) -> Self {
        Self { syllables: self.syllables.iter().rev().copied().collect() }
    }

    pub fn inverse(&self) -> Self {
        Self { syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    /// Moves the first `k` letters to the end (a conjugate of `self`).
    pub fn rotate(&self, k: usize) -> Self {
        let letters = self.letters();
        if letters.is_empty() {
            return self.clone();
        }
        let k = k % letters.len();
        Self::new(letters[k..].iter().chain(&letters[..k]).copied())
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity();
        for _ in 0..n.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// Parses whitespace-separated letters such as `a w^-1 a^2`, where
    /// `names` gives the spelling of the first and second generator. A lone
    /// `1` is the empty word, as printed by `to_text`.
    pub fn parse(text: &str, names: [&str; 2]) -> Result<Self, WordParseError> {
        let mut syllables = Vec::new();
        if text.trim() == "1" {
            return Ok(Self::identity());
        }
        for token in text.split_whitespace() {
            let (name, exp) = match token.split_once('^') {
                Some((n, e)) => {
                    let e: i32 = e
                        .trim_start_matches('(')
                        .trim_end_matches(')')
                        .parse()
                        .map_err(|_| WordParseError::BadExponent(token.into()))?;
                    (n, e)
                }
                None => (token, 1),
            };
            let g = if name == names[0] {
                Generator::First
            } else if name == names[1] {
                Generator::Second
            } else {
                return Err(WordParseError::UnknownGenerator(name.into()));
            };
            syllables.push((g, exp));
        }
        Ok(Self::new(syllables))
    }

    pub fn to_text(&self, names: [&str; 2]) -> String {
        if self.syllables.is_empty() {
            return String::from("1");
        }
        let parts: Vec<String> = self
            .syllables
            .iter()
            .map(|&(g, e)| {
                let name = match g {
                    Generator::First => names[0],
                    Generator::Second => names[1],
                };
                if e == 1 {
                    String::from(name)
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        parts.join(" ")
    }
}

fn push_reduced(out: &mut Vec<(Generator, i32)>, g: Generator, e: i32) {
    if e == 0 {
        return;
    }
    match out.last_mut() {
        Some((last, k)) if *last == g => {
            *k += e;
            if *k == 0 {
                out.pop();
            }
        }
        _ => out.push((g, e)),
    }
}

impl Mul for &FreeWord {
    type Output = FreeWord;
    fn mul(self, rhs: &FreeWord) -> FreeWord {
        let mut out = self.syllables.clone();
        for &(g, e) in &rhs.syllables {
            push_reduced(&mut out, g, e);
        }
        FreeWord { syllables: out }
    }
}

impl Mul for FreeWord {
    type Output = FreeWord;
    fn mul(self, rhs: FreeWord) -> FreeWord {
        &self * &rhs
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(["a", "b"]))
    }
}
