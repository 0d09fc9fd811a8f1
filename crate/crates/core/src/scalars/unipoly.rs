//! Polynomials in one spectral variable `u` over a caller-chosen coefficient ring.

use std::fmt;

use super::ratfunc::OmegaRatFunc;
use crate::error::{Error, Result};

/// Additive structure plus scaling by the ground field C(ω).
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    /// A zero of the same shape as `self` (e.g. the same algebra size).
    fn zero_like(&self) -> Self;
    fn is_zero_coeff(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn scale_ref(&self, c: &OmegaRatFunc) -> Self;
}

/// Coefficients that can also be multiplied with each other.
pub trait RingCoefficient: Coefficient {
    fn mul_ref(&self, rhs: &Self) -> Self;
}

impl Coefficient for OmegaRatFunc {
    fn zero_like(&self) -> Self {
        OmegaRatFunc::zero()
    }
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale_ref(&self, c: &OmegaRatFunc) -> Self {
        self * c
    }
}

impl RingCoefficient for OmegaRatFunc {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

/// `coeffs[k]` is the coefficient of `u^k`; trailing zeros are trimmed.
#[derive(Clone, PartialEq)]
pub struct UniPoly<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> UniPoly<C> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Coefficient::is_zero_coeff) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `u^k`, using `template` to build a zero when absent.
    pub fn coeff_or(&self, k: usize, template: &C) -> C {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| template.zero_like())
    }

    pub fn scale(&self, c: &OmegaRatFunc) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.scale_ref(c)).collect())
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(Coefficient::neg_ref).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.add_ref(s);
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// Multiplies by a scalar polynomial in `u`.
    pub fn mul_scalar_poly(&self, rhs: &UniPoly<OmegaRatFunc>) -> Self {
        let Some(template) = self.coeffs.first() else {
            return Self::zero();
        };
        if rhs.is_zero() {
            return Self::zero();
        }
        let len = self.coeffs.len() + rhs.coeffs.len() - 1;
        let mut out = vec![template.zero_like(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add_ref(&a.scale_ref(b));
                }
            }
        }
        Self::from_coeffs(out)
    }

    /// Returns `q` with `q(v) = p(v + c)`; synthetic division repeated, O(d²).
    pub fn taylor_shift(&self, c: &OmegaRatFunc) -> Self {
        let mut a = self.coeffs.clone();
        let d = a.len();
        if c.is_zero() {
            return self.clone();
        }
        for i in 0..d {
            for k in (i..d.saturating_sub(1)).rev() {
                let t = a[k + 1].scale_ref(c);
                a[k] = a[k].add_ref(&t);
            }
        }
        Self::from_coeffs(a)
    }

    /// Lowest index with a nonzero coefficient.
    pub fn lowest_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero_coeff())
    }
}

impl<C: RingCoefficient> UniPoly<C> {
    pub fn mul(&self, rhs: &Self) -> Self {
        let (Some(template), false) = (self.coeffs.first(), rhs.is_zero()) else {
            return Self::zero();
        };
        let len = self.coeffs.len() + rhs.coeffs.len() - 1;
        let mut out = vec![template.zero_like(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_coeff() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero_coeff() {
                    out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        Self::from_coeffs(out)
    }
}

impl UniPoly<OmegaRatFunc> {
    /// The monomial `u`.
    pub fn var() -> Self {
        Self::from_coeffs(vec![OmegaRatFunc::zero(), OmegaRatFunc::one()])
    }

    /// `a·u + b`.
    pub fn linear(a: OmegaRatFunc, b: OmegaRatFunc) -> Self {
        Self::from_coeffs(vec![b, a])
    }

    pub fn one() -> Self {
        Self::constant(OmegaRatFunc::one())
    }

    pub fn eval(&self, x: &OmegaRatFunc) -> OmegaRatFunc {
        let mut acc = OmegaRatFunc::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => Self::zero(),
            Some(lead) => self.scale(&lead.inv().expect("trimmed leading coefficient")),
        }
    }

    /// Quotient and remainder of Euclidean division.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = d.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![OmegaRatFunc::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let q = &rem[top] * &lead_inv;
            if !q.is_zero() {
                for (k, c) in d.coeffs.iter().enumerate() {
                    let idx = top - dd + k;
                    rem[idx] = &rem[idx] - &(&q * c);
                }
                quot[top - dd] = q;
            }
            rem.pop();
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Monic greatest common divisor over C(ω).
    pub fn gcd(&self, rhs: &Self) -> Result<Self> {
        if self.is_zero() && rhs.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Multiplicity of `c` as a root.
    pub fn root_order(&self, c: &OmegaRatFunc) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self
            .taylor_shift(c)
            .lowest_order()
            .expect("nonzero polynomial"))
    }
}

impl<C: fmt::Debug> fmt::Debug for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}
