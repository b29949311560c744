use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::exactpoly::MultiPoly;

/// Outcome of a verification. `NumericPass` is reserved for checks that are
/// floating-point by design.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    NumericPass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::NumericPass => "numeric-pass",
            Status::Fail => "fail",
        }
    }

    pub fn is_pass(self) -> bool {
        self != Status::Fail
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Detail {
    Bool(bool),
    Int(i64),
    Float(f64),
    Text(String),
    Poly(MultiPoly),
    List(Vec<Detail>),
}

impl From<bool> for Detail {
    fn from(b: bool) -> Self {
        Detail::Bool(b)
    }
}

impl From<i64> for Detail {
    fn from(v: i64) -> Self {
        Detail::Int(v)
    }
}

impl From<i32> for Detail {
    fn from(v: i32) -> Self {
        Detail::Int(v.into())
    }
}

impl From<usize> for Detail {
    fn from(v: usize) -> Self {
        Detail::Int(v as i64)
    }
}

impl From<f64> for Detail {
    fn from(v: f64) -> Self {
        Detail::Float(v)
    }
}

impl From<&str> for Detail {
    fn from(s: &str) -> Self {
        Detail::Text(s.to_string())
    }
}

impl From<String> for Detail {
    fn from(s: String) -> Self {
        Detail::Text(s)
    }
}

impl From<MultiPoly> for Detail {
    fn from(p: MultiPoly) -> Self {
        Detail::Poly(p)
    }
}

impl<T: Into<Detail>> From<Vec<T>> for Detail {
    fn from(v: Vec<T>) -> Self {
        Detail::List(v.into_iter().map(Into::into).collect())
    }
}

/// A pass/fail record tying one computed object to one published claim.
///
/// `claim_id` is a short stable anchor such as `"LemmaDifference"`; `subject`
/// names the instance, e.g. `"n=3"` or `"b(7,3)"`. A report starts out
/// passing and is demoted by the first failed [`check`](Self::check).
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub claim_id: String,
    pub subject: String,
    pub status: Status,
    pub details: Vec<(String, Detail)>,
}

impl VerificationReport {
    pub fn new(claim_id: impl Into<String>, subject: impl Into<String>) -> Self {
        Self { claim_id: claim_id.into(), subject: subject.into(), status: Status::Pass, details: Vec::new() }
    }

    /// Records an exact check.
    pub fn check(&mut self, key: impl Into<String>, ok: bool) -> bool {
        if !ok {
            self.status = Status::Fail;
        }
        self.details.push((key.into(), Detail::Bool(ok)));
        ok
    }

    /// Records a floating-point check; a passing report becomes `NumericPass`.
    pub fn numeric_check(&mut self, key: impl Into<String>, ok: bool) -> bool {
        match (ok, self.status) {
            (false, _) => self.status = Status::Fail,
            (true, Status::Pass) => self.status = Status::NumericPass,
            _ => {}
        }
        self.details.push((key.into(), Detail::Bool(ok)));
        ok
    }

    pub fn detail(&mut self, key: impl Into<String>, value: impl Into<Detail>) {
        self.details.push((key.into(), value.into()));
    }

    /// Marks the report failed with an explanation, e.g. when an internal
    /// computation errored before the claim could be tested.
    pub fn fail(&mut self, key: impl Into<String>, reason: impl Into<String>) {
        self.status = Status::Fail;
        self.details.push((key.into(), Detail::Text(reason.into())));
    }

    pub fn passed(&self) -> bool {
        self.status.is_pass()
    }

    pub fn get(&self, key: &str) -> Option<&Detail> {
        self.details.iter().find(|(k, _)| k == key).map(|(_, d)| d)
    }
}
