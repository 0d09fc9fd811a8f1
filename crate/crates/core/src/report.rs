//! Machine-readable outcomes of the verification suites.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use serde_json::Value;

use crate::brauer::BrauerElement;
use crate::scalars::OmegaRatFunc;

/// One named identity check.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub params: Value,
    pub passed: bool,
    /// Largest absolute integer numerator in `lhs − rhs`; `"0"` for an exact match.
    pub residual: String,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, params: Value, residual: BigInt) -> Self {
        Self {
            name: name.into(),
            params,
            passed: residual.is_zero(),
            residual: residual.to_string(),
        }
    }

    /// A check with a boolean outcome and no natural residual.
    pub fn flag(name: impl Into<String>, params: Value, passed: bool) -> Self {
        Self {
            name: name.into(),
            params,
            passed,
            residual: if passed { "0" } else { "1" }.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Report {
    pub suite: String,
    pub seed: Option<u64>,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(suite: impl Into<String>, seed: Option<u64>) -> Self {
        Self {
            suite: suite.into(),
            seed,
            passed: true,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, c: CheckResult) {
        self.passed &= c.passed;
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        for c in other.checks {
            self.push(c);
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Largest absolute numerator among the ω-coefficients of `f`'s numerator.
pub fn ratfunc_residual(f: &OmegaRatFunc) -> BigInt {
    f.num()
        .coeffs()
        .iter()
        .map(|c| c.numer().abs())
        .max()
        .unwrap_or_default()
}

/// Residual of `a − b` in the Brauer algebra.
pub fn element_residual(a: &BrauerElement, b: &BrauerElement) -> BigInt {
    (a - b)
        .terms()
        .values()
        .map(ratfunc_residual)
        .max()
        .unwrap_or_default()
}
