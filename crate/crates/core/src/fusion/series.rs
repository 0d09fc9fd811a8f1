//! Regular values of `v^p · S(v) · E · N_1(v) ⋯ N_m(v)` at `v = 0`, where
//! `S` is a product of scalar linear factors and the `N_i` are
//! algebra-valued polynomials. Only the Taylor coefficients that can reach
//! the answer are ever formed.

use crate::brauer::BrauerElement;
use crate::error::{Error, Result};
use crate::scalars::OmegaRatFunc;

/// Scalar factor `a·v + b` with `a ≠ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Lin {
    pub a: OmegaRatFunc,
    pub b: OmegaRatFunc,
}

impl Lin {
    pub fn new(a: OmegaRatFunc, b: OmegaRatFunc) -> Self {
        debug_assert!(!a.is_zero());
        Self { a, b }
    }

    /// `v + b`.
    pub fn shifted(b: OmegaRatFunc) -> Self {
        Self::new(OmegaRatFunc::one(), b)
    }

    /// `b − v`.
    pub fn reflected(b: OmegaRatFunc) -> Self {
        Self::new(OmegaRatFunc::from_int(-1), b)
    }
}

/// A product to be evaluated at `v = 0`.
#[derive(Clone, Debug)]
pub struct Chain {
    pub left: BrauerElement,
    /// Polynomial factors, lowest coefficient first.
    pub factors: Vec<Vec<BrauerElement>>,
    pub scalar_num: Vec<Lin>,
    pub scalar_den: Vec<Lin>,
    /// Extra power `v^p`.
    pub power: i64,
}

/// Taylor coefficients `0..=k` of `1/(a v + b)` with `b ≠ 0`.
fn inverse_series(l: &Lin, k: usize) -> Result<Vec<OmegaRatFunc>> {
    let inv_b = l.b.inv()?;
    let ratio = -&(&l.a * &inv_b);
    let mut out = Vec::with_capacity(k + 1);
    let mut cur = inv_b;
    for _ in 0..=k {
        out.push(cur.clone());
        cur = &cur * &ratio;
    }
    Ok(out)
}

fn mul_series(x: &[OmegaRatFunc], y: &[OmegaRatFunc], k: usize) -> Vec<OmegaRatFunc> {
    (0..=k)
        .map(|d| {
            (0..=d).fold(OmegaRatFunc::zero(), |acc, i| {
                match (x.get(i), y.get(d - i)) {
                    (Some(a), Some(b)) => &acc + &(a * b),
                    _ => acc,
                }
            })
        })
        .collect()
}

impl Chain {
    /// Pole order `k` of the scalar part (times `v^p`) at `v = 0`, and the
    /// Taylor coefficients `0..=k` of what remains after removing `v^{−k}`.
    fn scalar_part(&self) -> Result<(i64, Vec<OmegaRatFunc>)> {
        let mut pole = -self.power;
        let mut unit = OmegaRatFunc::one();
        let mut regular_num = Vec::new();
        let mut regular_den = Vec::new();
        for l in &self.scalar_num {
            if l.b.is_zero() {
                pole -= 1;
                unit = &unit * &l.a;
            } else {
                regular_num.push(l);
            }
        }
        for l in &self.scalar_den {
            if l.b.is_zero() {
                pole += 1;
                unit = &unit * &l.a.inv()?;
            } else {
                regular_den.push(l);
            }
        }
        let k = pole.max(0) as usize;
        let mut series = vec![unit];
        for l in regular_num {
            series = mul_series(&series, &[l.b.clone(), l.a.clone()], k);
        }
        for l in regular_den {
            series = mul_series(&series, &inverse_series(l, k)?, k);
        }
        Ok((pole, series))
    }

    /// The value at `v = 0`; `point` labels errors.
    pub fn regular_value(&self, point: &OmegaRatFunc) -> Result<BrauerElement> {
        let n = self.left.n();
        let (pole, series) = self.scalar_part()?;
        if pole < 0 {
            return Ok(BrauerElement::zero(n));
        }
        let k = pole as usize;
        // Algebra part, truncated after v^k.
        let mut acc: Vec<BrauerElement> = vec![self.left.clone()];
        for f in &self.factors {
            let mut next = vec![BrauerElement::zero(n); (acc.len() + f.len() - 1).min(k + 1)];
            for (i, a) in acc.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in f.iter().enumerate() {
                    if i + j > k || b.is_zero() {
                        continue;
                    }
                    next[i + j] = &next[i + j] + &(a * b);
                }
            }
            acc = next;
        }
        if let Some(z) = acc.iter().take(k).position(|a| !a.is_zero()) {
            return Err(Error::FusionRegularity {
                point: point.to_string(),
                numerator_order: z,
                exponent: self.power,
                denominator_order: k,
            });
        }
        let mut out = BrauerElement::zero(n);
        for (i, s) in series.iter().enumerate().take(k + 1) {
            if let Some(a) = acc.get(k - i) {
                if !a.is_zero() && !s.is_zero() {
                    out = &out + &a.scale(s);
                }
            }
        }
        Ok(out)
    }
}
