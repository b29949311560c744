use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{rat, PolyError, Rational};

/// Sparse polynomial over the rationals in an ordered list of named variables.
///
/// Terms are keyed by exponent vectors, one entry per variable. Variables
/// flagged as Laurent may carry negative exponents. Zero coefficients are
/// never stored, so two polynomials over the same variable list are equal
/// exactly when their term maps are.
///
/// Binary operators accept operands over different variable lists and work
/// over the union (left operand's variables first). [`MultiPoly::arith`] is
/// the strict variant that refuses mismatched lists.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    vars: Vec<String>,
    laurent: Vec<bool>,
    terms: BTreeMap<Vec<i32>, Rational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl MultiPoly {
    pub fn zero(vars: &[&str]) -> Self {
        Self {
            vars: vars.iter().map(|v| (*v).to_owned()).collect(),
            laurent: vec![false; vars.len()],
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn from_int(vars: &[&str], c: i64) -> Self {
        Self::constant(vars, rat(c))
    }

    /// The polynomial `name`.
    ///
    /// # Panics
    /// If `name` is not one of `vars`.
    pub fn var(vars: &[&str], name: &str) -> Self {
        let idx = vars.iter().position(|v| *v == name).unwrap_or_else(|| panic!("variable `{name}` not in {vars:?}"));
        let mut exp = vec![0; vars.len()];
        exp[idx] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(exp, rat(1));
        p
    }

    /// Marks the named variables as Laurent. Unknown names are ignored.
    pub fn with_laurent(mut self, names: &[&str]) -> Self {
        for (v, flag) in self.vars.iter().zip(self.laurent.iter_mut()) {
            if names.contains(&v.as_str()) {
                *flag = true;
            }
        }
        self
    }

    pub fn from_terms<I>(vars: &[&str], laurent: &[&str], terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Vec<i32>, Rational)>,
    {
        let mut p = Self::zero(vars).with_laurent(laurent);
        for (exp, c) in terms {
            if exp.len() != p.vars.len() {
                return Err(PolyError::Unsupported("exponent vector length does not match variable list".to_string()));
            }
            p.check_exponents(&exp)?;
            p.add_term(exp, c);
        }
        Ok(p)
    }

    fn check_exponents(&self, exp: &[i32]) -> Result<(), PolyError> {
        for (i, e) in exp.iter().enumerate() {
            if *e < 0 && !self.laurent[i] {
                return Err(PolyError::NegativeExponent(self.vars[i].clone()));
            }
        }
        Ok(())
    }

    /// Same variables and flags, no terms.
    pub fn zero_like(&self) -> Self {
        Self { vars: self.vars.clone(), laurent: self.laurent.clone(), terms: BTreeMap::new() }
    }

    pub fn constant_like(&self, c: Rational) -> Self {
        let mut p = self.zero_like();
        if !c.is_zero() {
            p.terms.insert(vec![0; self.vars.len()], c);
        }
        p
    }

    pub fn one_like(&self) -> Self {
        self.constant_like(rat(1))
    }

    pub fn var_like(&self, name: &str) -> Result<Self, PolyError> {
        let idx = self.index_of(name)?;
        let mut exp = vec![0; self.vars.len()];
        exp[idx] = 1;
        let mut p = self.zero_like();
        p.terms.insert(exp, rat(1));
        Ok(p)
    }

    /// `coeff * prod vars^exp` in this polynomial's ring.
    pub fn monomial_like(&self, exp: Vec<i32>, coeff: Rational) -> Result<Self, PolyError> {
        if exp.len() != self.vars.len() {
            return Err(PolyError::Unsupported("exponent vector length does not match variable list".to_string()));
        }
        let mut p = self.zero_like();
        p.check_exponents(&exp)?;
        p.add_term(exp, coeff);
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, exp: Vec<i32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn laurent_flags(&self) -> &[bool] {
        &self.laurent
    }

    pub fn is_laurent(&self, name: &str) -> bool {
        self.vars.iter().position(|v| v == name).map(|i| self.laurent[i]).unwrap_or(false)
    }

    pub fn index_of(&self, name: &str) -> Result<usize, PolyError> {
        self.vars.iter().position(|v| v == name).ok_or_else(|| PolyError::UnknownVariable(name.to_owned()))
    }

    pub fn has_var(&self, name: &str) -> bool {
        self.vars.iter().any(|v| v == name)
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[i32], &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// `Some(c)` when the polynomial is the constant `c` (zero included).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(rat(0)),
            1 => {
                let (e, c) = self.terms.iter().next()?;
                e.iter().all(|x| *x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn coefficient(&self, exp: &[i32]) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(|| rat(0))
    }

    /// Largest term in lexicographic order (first variable most significant).
    pub fn leading_term(&self) -> Option<(&[i32], &Rational)> {
        self.terms.iter().next_back().map(|(e, c)| (e.as_slice(), c))
    }

    /// Variables that occur with a non-zero exponent in some term.
    pub fn used_vars(&self) -> Vec<String> {
        (0..self.vars.len()).filter(|&i| self.terms.keys().any(|e| e[i] != 0)).map(|i| self.vars[i].clone()).collect()
    }

    // ---------------------------------------------------------------------
    // Variable lists

    /// Re-expresses the polynomial over `vars`. Every variable actually used
    /// must be present in the new list.
    pub fn aligned(&self, vars: &[String]) -> Result<Self, PolyError> {
        if vars == self.vars.as_slice() {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match vars.iter().position(|w| w == v) {
                Some(j) => map.push(Some(j)),
                None => {
                    if self.terms.keys().any(|e| e[i] != 0) {
                        return Err(PolyError::VarMismatch { left: self.vars.clone(), right: vars.to_vec() });
                    }
                    map.push(None);
                }
            }
        }
        let mut laurent = vec![false; vars.len()];
        for (i, slot) in map.iter().enumerate() {
            if let Some(j) = slot {
                laurent[*j] = self.laurent[i];
            }
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = vec![0; vars.len()];
            for (i, slot) in map.iter().enumerate() {
                if let Some(j) = slot {
                    ne[*j] = e[i];
                }
            }
            terms.insert(ne, c.clone());
        }
        Ok(Self { vars: vars.to_vec(), laurent, terms })
    }

    pub fn aligned_str(&self, vars: &[&str]) -> Result<Self, PolyError> {
        let owned: Vec<String> = vars.iter().map(|v| (*v).to_owned()).collect();
        self.aligned(&owned)
    }

    /// Union of the two variable lists, `self`'s order first.
    pub fn union_vars(&self, other: &Self) -> Vec<String> {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars
    }

    fn merged_flags(&self, other: &Self, vars: &[String]) -> Vec<bool> {
        vars.iter().map(|v| self.is_laurent(v) || other.is_laurent(v)).collect()
    }

    fn common_ring(&self, other: &Self) -> (Self, Self) {
        let vars = self.union_vars(other);
        let flags = self.merged_flags(other, &vars);
        let mut a = self.aligned(&vars).expect("union contains all variables");
        let mut b = other.aligned(&vars).expect("union contains all variables");
        a.laurent.clone_from(&flags);
        b.laurent = flags;
        (a, b)
    }

    /// Strict arithmetic: both operands must share the same variable list.
    pub fn arith(&self, other: &Self, op: ArithOp) -> Result<Self, PolyError> {
        if self.vars != other.vars {
            return Err(PolyError::VarMismatch { left: self.vars.clone(), right: other.vars.clone() });
        }
        Ok(match op {
            ArithOp::Add => self.add_same(other),
            ArithOp::Sub => self.sub_same(other),
            ArithOp::Mul => self.mul_same(other),
        })
    }

    fn add_same(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, f) in out.laurent.iter_mut().enumerate() {
            *f |= other.laurent[i];
        }
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    fn sub_same(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, f) in out.laurent.iter_mut().enumerate() {
            *f |= other.laurent[i];
        }
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    fn mul_same(&self, other: &Self) -> Self {
        let mut out = self.zero_like();
        for (i, f) in out.laurent.iter_mut().enumerate() {
            *f |= other.laurent[i];
        }
        // Multiplying by a bare monomial is a relabelling of exponents.
        for (mono, poly) in [(self, other), (other, self)] {
            if mono.terms.len() == 1 {
                let (e, c) = mono.terms.iter().next().expect("one term");
                if c.is_one() {
                    let mut shifted = poly.shift(e);
                    shifted.laurent = out.laurent;
                    return shifted;
                }
            }
        }
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    fn binop(&self, other: &Self, op: ArithOp) -> Self {
        if self.vars == other.vars {
            return self.arith(other, op).expect("same variables");
        }
        let (a, b) = self.common_ring(other);
        a.arith(&b, op).expect("aligned")
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return self.zero_like();
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = self.one_like();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Multiplies by the monomial `prod vars^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        let mut out = self.zero_like();
        for (e, c) in &self.terms {
            let ne: Vec<i32> = e.iter().zip(shift).map(|(a, b)| a + b).collect();
            out.terms.insert(ne, c.clone());
        }
        out
    }

    /// Component-wise minimum exponent over all terms (zeros for the zero
    /// polynomial).
    pub fn min_exponents(&self) -> Vec<i32> {
        let mut mins = vec![i32::MAX; self.vars.len()];
        for e in self.terms.keys() {
            for (m, x) in mins.iter_mut().zip(e) {
                *m = (*m).min(*x);
            }
        }
        if self.terms.is_empty() {
            mins.iter_mut().for_each(|m| *m = 0);
        }
        mins
    }

    // ---------------------------------------------------------------------
    // Degrees and coefficients

    pub fn degree_in(&self, var: &str) -> Result<Option<i32>, PolyError> {
        let i = self.index_of(var)?;
        Ok(self.terms.keys().map(|e| e[i]).max())
    }

    pub fn min_degree_in(&self, var: &str) -> Result<Option<i32>, PolyError> {
        let i = self.index_of(var)?;
        Ok(self.terms.keys().map(|e| e[i]).min())
    }

    pub fn total_degree(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_constant_in(&self, var: &str) -> Result<bool, PolyError> {
        let i = self.index_of(var)?;
        Ok(self.terms.keys().all(|e| e[i] == 0))
    }

    /// Coefficients as a univariate polynomial in `var`; each coefficient
    /// keeps the full variable list with the exponent of `var` zeroed.
    pub fn coeffs_in(&self, var: &str) -> Result<BTreeMap<i32, MultiPoly>, PolyError> {
        let i = self.index_of(var)?;
        Ok(self.coeffs_at(i))
    }

    pub(crate) fn coeffs_at(&self, i: usize) -> BTreeMap<i32, MultiPoly> {
        let mut out: BTreeMap<i32, MultiPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne[i] = 0;
            out.entry(e[i]).or_insert_with(|| self.zero_like()).terms.insert(ne, c.clone());
        }
        out
    }

    /// Coefficient of `var^k`.
    pub fn coeff_of(&self, var: &str, k: i32) -> Result<MultiPoly, PolyError> {
        let i = self.index_of(var)?;
        let mut out = self.zero_like();
        for (e, c) in &self.terms {
            if e[i] == k {
                let mut ne = e.clone();
                ne[i] = 0;
                out.terms.insert(ne, c.clone());
            }
        }
        Ok(out)
    }

    pub fn leading_coeff_in(&self, var: &str) -> Result<MultiPoly, PolyError> {
        match self.degree_in(var)? {
            None => Ok(self.zero_like()),
            Some(d) => self.coeff_of(var, d),
        }
    }

    /// Terms of maximal total degree.
    pub fn top_degree_part(&self) -> Self {
        let mut out = self.zero_like();
        if let Some(top) = self.total_degree() {
            for (e, c) in &self.terms {
                if e.iter().sum::<i32>() == top {
                    out.terms.insert(e.clone(), c.clone());
                }
            }
        }
        out
    }

    // ---------------------------------------------------------------------
    // Calculus and substitution

    /// Formal partial derivative.
    pub fn derivative(&self, var: &str) -> Result<Self, PolyError> {
        let i = self.index_of(var)?;
        if self.terms.keys().any(|e| e[i] < 0) {
            return Err(PolyError::Unsupported(alloc::format!(
                "derivative in `{var}` of a polynomial with negative exponents"
            )));
        }
        let mut out = self.zero_like();
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut ne = e.clone();
                ne[i] -= 1;
                out.add_term(ne, c * rat(i64::from(e[i])));
            }
        }
        Ok(out)
    }

    /// Replaces `var` by `replacement`. The result lives over the union of the
    /// two variable lists; `var` itself stays in the list unless it is
    /// [`dropped`](Self::drop_var) afterwards.
    pub fn substitute(&self, var: &str, replacement: &MultiPoly) -> Result<Self, PolyError> {
        let i = self.index_of(var)?;
        let groups = self.coeffs_at(i);
        let (mut result, repl) = self.zero_like().common_ring(replacement);
        let inverse = if groups.keys().any(|k| *k < 0) {
            Some(unit_monomial_inverse(&repl).ok_or_else(|| {
                PolyError::Unsupported(alloc::format!("negative powers of `{var}` need a unit monomial replacement"))
            })?)
        } else {
            None
        };
        let mut cache: BTreeMap<i32, MultiPoly> = BTreeMap::new();
        for (k, coeff) in groups {
            let power = cache
                .entry(k)
                .or_insert_with(|| {
                    if k >= 0 {
                        repl.pow(k.unsigned_abs())
                    } else {
                        inverse.as_ref().expect("checked above").pow(k.unsigned_abs())
                    }
                })
                .clone();
            result = &result + &(&coeff * &power);
        }
        Ok(result)
    }

    /// Substitutes a rational value for `var`; `var` stays in the list.
    pub fn eval_at(&self, var: &str, value: &Rational) -> Result<Self, PolyError> {
        let i = self.index_of(var)?;
        if value.is_zero() && self.terms.keys().any(|e| e[i] < 0) {
            return Err(PolyError::DivisionByZero);
        }
        let mut out = self.zero_like();
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne[i] = 0;
            let factor = pow_rational(value, e[i]);
            out.add_term(ne, c * factor);
        }
        Ok(out)
    }

    /// Rewrites `var^(power*k)` as `new_var^k`. Fails when some exponent of
    /// `var` is not a multiple of `power`. `var` is removed from the result
    /// and `new_var` appended (or reused when already present).
    pub fn substitute_power(&self, var: &str, power: i32, new_var: &str) -> Result<Self, PolyError> {
        if power <= 0 {
            return Err(PolyError::Unsupported("power must be positive".to_owned()));
        }
        let i = self.index_of(var)?;
        if let Some(e) = self.terms.keys().find(|e| e[i] % power != 0) {
            return Err(PolyError::Unsupported(alloc::format!(
                "exponent {} of `{var}` is not a multiple of {power}",
                e[i]
            )));
        }
        let mut vars: Vec<String> = self.vars.clone();
        let mut laurent = self.laurent.clone();
        let target = match vars.iter().position(|v| v == new_var) {
            Some(j) => j,
            None => {
                vars.push(new_var.to_owned());
                laurent.push(self.laurent[i]);
                vars.len() - 1
            }
        };
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne.resize(vars.len(), 0);
            ne[target] += e[i] / power;
            ne[i] = 0;
            terms.insert(ne, c.clone());
        }
        let p = Self { vars, laurent, terms };
        p.drop_var(var)
    }

    /// Removes `name` from the variable list; fails if it occurs.
    pub fn drop_var(&self, name: &str) -> Result<Self, PolyError> {
        let i = self.index_of(name)?;
        if self.terms.keys().any(|e| e[i] != 0) {
            return Err(PolyError::Unsupported(alloc::format!("cannot drop `{name}`: it occurs in the polynomial")));
        }
        let mut vars = self.vars.clone();
        vars.remove(i);
        let mut laurent = self.laurent.clone();
        laurent.remove(i);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = e.clone();
                ne.remove(i);
                (ne, c.clone())
            })
            .collect();
        Ok(Self { vars, laurent, terms })
    }

    pub fn rename_var(&self, from: &str, to: &str) -> Result<Self, PolyError> {
        let i = self.index_of(from)?;
        if from != to && self.has_var(to) {
            return Err(PolyError::Unsupported(alloc::format!("cannot rename `{from}` to existing variable `{to}`")));
        }
        let mut out = self.clone();
        out.vars[i] = to.to_owned();
        Ok(out)
    }

    /// Evaluates at rational values for every variable.
    pub fn eval_rational(&self, point: &[(&str, Rational)]) -> Result<Rational, PolyError> {
        let mut values = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            let val = point
                .iter()
                .find(|(n, _)| *n == v.as_str())
                .map(|(_, x)| x.clone())
                .ok_or_else(|| PolyError::MissingAssignment(v.clone()))?;
            values.push(val);
        }
        let mut acc = rat(0);
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, k) in values.iter().zip(e) {
                if x.is_zero() && *k < 0 {
                    return Err(PolyError::DivisionByZero);
                }
                t *= pow_rational(x, *k);
            }
            acc += t;
        }
        Ok(acc)
    }

    // ---------------------------------------------------------------------
    // Normalization

    /// Content over the integers: `gcd(numerators) / lcm(denominators)`,
    /// positive. Zero for the zero polynomial.
    pub fn rational_content(&self) -> Rational {
        use num_integer::Integer;
        let mut num = num_bigint::BigInt::zero();
        let mut den = num_bigint::BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return rat(0);
        }
        Rational::new(num, den)
    }

    /// Scalar multiple with coprime integer coefficients and a positive
    /// leading coefficient (lexicographic leading term).
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let content = self.rational_content();
        let lead_negative = self.leading_term().map(|(_, c)| c.is_negative()).unwrap_or(false);
        let factor = if lead_negative { -content.recip() } else { content.recip() };
        self.scale(&factor)
    }

    /// Scalar multiple whose lexicographic leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }
}

fn pow_rational(x: &Rational, k: i32) -> Rational {
    let base = if k < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, k.unsigned_abs() as usize)
}

/// Inverse of `c * monomial` when every exponent may be negated.
fn unit_monomial_inverse(p: &MultiPoly) -> Option<MultiPoly> {
    if p.terms.len() != 1 {
        return None;
    }
    let (e, c) = p.terms.iter().next()?;
    let ne: Vec<i32> = e.iter().map(|x| -x).collect();
    let mut out = p.zero_like();
    for (i, x) in ne.iter().enumerate() {
        if *x < 0 {
            out.laurent[i] = true;
        }
    }
    out.terms.insert(ne, c.recip());
    Some(out)
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let vars = self.union_vars(other);
        match (self.aligned(&vars), other.aligned(&vars)) {
            (Ok(a), Ok(b)) => a.terms == b.terms,
            _ => false,
        }
    }
}

impl Eq for MultiPoly {}

macro_rules! forward_binop {
    ($imp:ident, $method:ident, $op:expr) => {
        impl<'a> $imp<&'a MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &'a MultiPoly) -> MultiPoly {
                self.binop(rhs, $op)
            }
        }
        impl $imp<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.binop(&rhs, $op)
            }
        }
        impl<'a> $imp<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &'a MultiPoly) -> MultiPoly {
                self.binop(rhs, $op)
            }
        }
        impl<'a> $imp<MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.binop(&rhs, $op)
            }
        }
    };
}

forward_binop!(Add, add, ArithOp::Add);
forward_binop!(Sub, sub, ArithOp::Sub);
forward_binop!(Mul, mul, ArithOp::Mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = -v.clone();
        }
        out
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(vars: &[&str], s: &str) -> MultiPoly {
        MultiPoly::parse(vars, s).unwrap()
    }

    #[test]
    fn cancellation_and_products() {
        let v = ["z"];
        assert_eq!(p(&v, "z^2 + 1") + p(&v, "-1"), p(&v, "z^2"));
        assert_eq!(p(&v, "z - 1") * p(&v, "z + 1"), p(&v, "z^2 - 1"));
        let v = ["y", "z"];
        let yz = p(&v, "y*z");
        assert_eq!(&yz * &yz, p(&v, "y^2*z^2"));
    }

    #[test]
    fn strict_arith_rejects_mismatched_lists() {
        let a = p(&["x", "z"], "x + z");
        let b = p(&["z", "x"], "x");
        assert!(matches!(a.arith(&b, ArithOp::Add), Err(PolyError::VarMismatch { .. })));
        let b = b.aligned(a.vars()).unwrap();
        assert_eq!(a.arith(&b, ArithOp::Add).unwrap(), p(&["x", "z"], "2*x + z"));
    }

    #[test]
    fn derivatives() {
        let v = ["x", "y", "z"];
        assert_eq!(p(&v, "z^3").derivative("z").unwrap(), p(&v, "3*z^2"));
        assert!(p(&v, "y^2").derivative("z").unwrap().is_zero());
        assert_eq!(p(&v, "z^2 - x*z").derivative("z").unwrap(), p(&v, "2*z - x"));
        let laurent = p(&["z"], "z^-1 + z");
        assert!(matches!(laurent.derivative("z"), Err(PolyError::Unsupported(_))));
    }

    #[test]
    fn substitutions() {
        let v = ["x", "y", "z"];
        let q = p(&v, "y^2*z");
        let x = MultiPoly::var(&v, "x");
        assert_eq!(q.substitute("y", &x).unwrap(), p(&v, "x^2*z"));

        let q = p(&["x", "z"], "x^4 + x^2*z");
        let r = q.substitute_power("x", 2, "X").unwrap();
        assert_eq!(r, p(&["z", "X"], "X^2 + X*z"));
        assert!(p(&["x"], "x^3").substitute_power("x", 2, "X").is_err());

        // negative exponents need a unit monomial
        let l = p(&["t", "M"], "t^-2*M + 1");
        let t2 = p(&["t", "M"], "t^2");
        assert_eq!(l.substitute("t", &t2).unwrap(), p(&["t", "M"], "t^-4*M + 1"));
        assert!(l.substitute("t", &p(&["t", "M"], "t + 1")).is_err());
    }

    #[test]
    fn eval_and_drop() {
        let v = ["x", "z"];
        let q = p(&v, "x^2*z + x - 3");
        let at = q.eval_at("x", &rat(2)).unwrap();
        assert_eq!(at, p(&v, "4*z - 1"));
        assert_eq!(at.drop_var("x").unwrap().vars(), &["z".to_owned()]);
        assert!(q.drop_var("x").is_err());
        assert_eq!(q.eval_rational(&[("x", rat(1)), ("z", rat(5))]).unwrap(), rat(3));
        assert!(matches!(q.eval_rational(&[("x", rat(1))]), Err(PolyError::MissingAssignment(_))));
    }

    #[test]
    fn equality_across_variable_orders() {
        let a = p(&["x", "y"], "x + 2*y");
        let b = p(&["y", "x", "w"], "2*y + x");
        assert_eq!(a, b);
        assert_ne!(a, p(&["x"], "x"));
    }

    #[test]
    fn normalization() {
        let q = p(&["x"], "-2/3*x + 4/9");
        assert_eq!(q.normalized(), p(&["x"], "3*x - 2"));
        assert_eq!(q.monic(), p(&["x"], "x - 2/3"));
    }

    #[test]
    fn negative_exponents_need_laurent_flag() {
        let r = MultiPoly::from_terms(&["z"], &[], [(vec![-1], rat(1))]);
        assert!(matches!(r, Err(PolyError::NegativeExponent(_))));
        let r = MultiPoly::from_terms(&["z"], &["z"], [(vec![-1], rat(1))]).unwrap();
        assert!(r.is_laurent("z"));
    }
}
