//! Big rational helpers on top of `num-rational`.
//!
//! `num_rational::BigRational` already keeps values in lowest terms with a
//! positive denominator, which is the canonical form the rest of the crate
//! relies on for structural equality.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub use num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn rat_add(a: &BigRational, b: &BigRational) -> BigRational {
    a + b
}

pub fn rat_mul(a: &BigRational, b: &BigRational) -> BigRational {
    a * b
}

pub fn rat_neg(a: &BigRational) -> BigRational {
    -a
}

pub fn rat_inv(a: &BigRational) -> Result<BigRational> {
    if a.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a.recip())
}

/// Builds `num/den` in lowest terms; a zero denominator is an error.
pub fn rat_normalize(num: BigInt, den: BigInt) -> Result<BigRational> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(num, den))
}

/// Serializes as `"p/q"` with `q >= 1`, always including the denominator.
pub fn format_rational(a: &BigRational) -> String {
    format!("{}/{}", a.numer(), a.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            rat_normalize(p, q)
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(p))
        }
    }
}

/// Largest absolute value of numerator among the entries, used in residual reports.
pub fn max_abs_numerator<'a>(values: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    values
        .into_iter()
        .map(|v| v.numer().abs())
        .max()
        .unwrap_or_else(BigInt::zero)
}
