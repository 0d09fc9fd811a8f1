//! Dense polynomials in the Brauer parameter ω over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{format_rational, BigRational};
use crate::error::{Error, Result};

/// Polynomial in ω; `coeffs[k]` is the coefficient of ω^k.
///
/// The leading coefficient is never zero; the zero polynomial has no
/// coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct OmegaPoly {
    coeffs: Vec<BigRational>,
}

impl OmegaPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate ω itself.
    pub fn omega() -> Self {
        Self::from_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    /// `a·ω + b`.
    pub fn linear(a: BigRational, b: BigRational) -> Self {
        Self::from_coeffs(vec![b, a])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let d_deg = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.coeffs[d_deg].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - d_deg];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d_deg] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let t = &c * dc;
                rem[k + j] -= t;
            }
            quot[k] = c;
        }
        rem.truncate(d_deg);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Exact quotient when `divisor` is known to divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Inconsistent(format!(
                "{divisor:?} does not divide {self:?}"
            )));
        }
        Ok(q)
    }

    /// Power `self^e`.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn to_string_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigRational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { "-" } else { "+" });
            }
            let mag = if abs.is_integer() {
                abs.numer().to_string()
            } else {
                format_rational(&abs)
            };
            match k {
                0 => out.push_str(&mag),
                _ => {
                    if !abs.is_one() {
                        out.push_str(&mag);
                    }
                    out.push_str(var);
                    if k > 1 {
                        out.push('^');
                        out.push_str(&k.to_string());
                    }
                }
            }
        }
        out
    }
}

/// Monic gcd over the rationals.
pub fn poly_gcd(p: &OmegaPoly, q: &OmegaPoly) -> Result<OmegaPoly> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::ZeroGcd);
    }
    let (mut a, mut b) = if p.degree() >= q.degree() {
        (p.monic(), q.monic())
    } else {
        (q.monic(), p.monic())
    };
    while !b.is_zero() {
        if b.degree() == Some(0) {
            return Ok(OmegaPoly::one());
        }
        let (_, r) = a.div_rem(&b)?;
        a = b;
        b = r.monic();
    }
    Ok(a)
}

impl fmt::Display for OmegaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with("ω"))
    }
}

impl fmt::Debug for OmegaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OmegaPoly({self})")
    }
}

impl Add for &OmegaPoly {
    type Output = OmegaPoly;
    fn add(self, rhs: &OmegaPoly) -> OmegaPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        OmegaPoly::from_coeffs(coeffs)
    }
}

impl Sub for &OmegaPoly {
    type Output = OmegaPoly;
    fn sub(self, rhs: &OmegaPoly) -> OmegaPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(len, BigRational::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        OmegaPoly::from_coeffs(coeffs)
    }
}

impl Neg for &OmegaPoly {
    type Output = OmegaPoly;
    fn neg(self) -> OmegaPoly {
        OmegaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &OmegaPoly {
    type Output = OmegaPoly;
    fn mul(self, rhs: &OmegaPoly) -> OmegaPoly {
        if self.is_zero() || rhs.is_zero() {
            return OmegaPoly::zero();
        }
        if self.coeffs.len() == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.coeffs.len() == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        OmegaPoly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for OmegaPoly {
            type Output = OmegaPoly;
            fn $m(self, rhs: OmegaPoly) -> OmegaPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::{int, rat};

    fn p(c: &[i64]) -> OmegaPoly {
        OmegaPoly::from_coeffs(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn gcd_examples() {
        // ω²−1, ω−1
        assert_eq!(
            poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(),
            p(&[-1, 1])
        );
        assert_eq!(poly_gcd(&p(&[0, 1]), &p(&[1, 1])).unwrap(), p(&[1]));
        assert_eq!(poly_gcd(&p(&[2, 2]), &p(&[1, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(
            poly_gcd(&OmegaPoly::zero(), &p(&[3, 6])).unwrap(),
            p(&[1, 2]).monic()
        );
        assert_eq!(
            poly_gcd(&OmegaPoly::zero(), &OmegaPoly::zero()),
            Err(Error::ZeroGcd)
        );
    }

    #[test]
    fn division() {
        let (q, r) = p(&[-1, 0, 1]).div_rem(&p(&[1, 1])).unwrap();
        assert_eq!(q, p(&[-1, 1]));
        assert!(r.is_zero());
        let (q, r) = p(&[1, 0, 2]).div_rem(&p(&[0, 2])).unwrap();
        assert_eq!(q, p(&[0, 1]));
        assert_eq!(r, p(&[1]));
        assert!(p(&[1]).div_rem(&OmegaPoly::zero()).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, 1]).to_string(), "ω-1");
        assert_eq!(p(&[4, 0, -2]).to_string(), "-2ω^2+4");
        let half = OmegaPoly::linear(rat(1, 2), rat(-1, 2));
        assert_eq!(half.to_string(), "1/2ω-1/2");
        assert_eq!(OmegaPoly::zero().to_string(), "0");
    }

    #[test]
    fn eval_horner() {
        assert_eq!(p(&[1, 2, 3]).eval(&int(2)), int(17));
        assert_eq!(p(&[1, 2, 3]).eval(&rat(1, 3)), rat(2, 1));
    }
}
