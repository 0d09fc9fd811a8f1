//! Reduced rational functions in ω; the ground field of the Brauer algebra.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{poly_gcd, OmegaPoly};
use super::rational::{format_rational, parse_rational, BigRational};
use crate::error::{Error, Result};

/// `num/den` with `gcd(num, den) = 1` and `den` monic.
///
/// Because the representation is canonical, derived equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OmegaRatFunc {
    num: OmegaPoly,
    den: OmegaPoly,
}

impl OmegaRatFunc {
    pub fn zero() -> Self {
        Self {
            num: OmegaPoly::zero(),
            den: OmegaPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(OmegaPoly::one())
    }

    pub fn omega() -> Self {
        Self::from_poly(OmegaPoly::omega())
    }

    pub fn from_poly(p: OmegaPoly) -> Self {
        Self {
            num: p,
            den: OmegaPoly::one(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(OmegaPoly::constant(c))
    }

    pub fn from_int(v: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_rat(num: i64, den: i64) -> Self {
        Self::constant(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `a·ω + b`.
    pub fn linear(a: BigRational, b: BigRational) -> Self {
        Self::from_poly(OmegaPoly::linear(a, b))
    }

    /// Canonical form of `num/den`.
    pub fn reduce(num: OmegaPoly, den: OmegaPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        if den.is_constant() {
            let c = den.coeff(0).recip();
            return Ok(Self::from_poly(num.scale(&c)));
        }
        let g = poly_gcd(&num, &den)?;
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g)?, den.exact_div(&g)?)
        };
        let lead = den.leading().expect("nonzero").recip();
        Ok(Self {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn num(&self) -> &OmegaPoly {
        &self.num
    }

    pub fn den(&self) -> &OmegaPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// `Some(c)` when the function is the constant `c`.
    pub fn as_constant(&self) -> Option<BigRational> {
        (self.den.is_one() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::reduce(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Value at `ω = q`.
    pub fn evaluate(&self, q: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q);
        if d.is_zero() {
            return Err(Error::Specialization(format_rational(q)));
        }
        Ok(self.num.eval(q) / d)
    }

    /// Limit as ω → ∞, or `None` when the function grows without bound.
    pub fn limit_at_infinity(&self) -> Option<BigRational> {
        let dn = self.num.degree();
        let dd = self.den.degree().expect("denominator is nonzero");
        match dn {
            None => Some(BigRational::zero()),
            Some(k) if k < dd => Some(BigRational::zero()),
            Some(k) if k == dd => Some(self.num.leading().cloned().expect("nonzero")),
            _ => None,
        }
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return Self::from_poly(&self.num + &rhs.num);
            }
            return Self::reduce(&self.num + &rhs.num, self.den.clone()).expect("nonzero den");
        }
        if rhs.den.is_one() {
            return Self {
                num: &self.num + &(&rhs.num * &self.den),
                den: self.den.clone(),
            };
        }
        if self.den.is_one() {
            return Self {
                num: &(&self.num * &rhs.den) + &rhs.num,
                den: rhs.den.clone(),
            };
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Self::reduce(num, &self.den * &rhs.den).expect("nonzero den")
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(&self.num * &rhs.num);
        }
        // Cross-cancel first so the gcds stay small.
        let g1 = poly_gcd(&self.num, &rhs.den).expect("nonzero");
        let g2 = poly_gcd(&rhs.num, &self.den).expect("nonzero");
        let n1 = self.num.exact_div(&g1).expect("divides");
        let d2 = rhs.den.exact_div(&g1).expect("divides");
        let n2 = rhs.num.exact_div(&g2).expect("divides");
        let d1 = self.den.exact_div(&g2).expect("divides");
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lead = den.leading().expect("nonzero").recip();
        Self {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    /// Human-readable form with the rational content pulled out, e.g.
    /// `(ω-1)/2`, `2(ω+4)/(ω+2)`, `1/ω`.
    pub fn to_display_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let (cn, pn) = primitive_part(&self.num);
        let (cd, pd) = primitive_part(&self.den);
        let c = cn / cd;
        let neg = c.is_negative();
        let c = c.abs();
        let p = c.numer().clone();
        let q = c.denom().clone();

        let mut out = String::new();
        if neg {
            out.push('-');
        }
        if pn.is_one() {
            out.push_str(&p.to_string());
        } else {
            if !p.is_one() {
                out.push_str(&p.to_string());
            }
            out.push_str(&wrap(&pn));
        }
        if pd.is_one() {
            if !q.is_one() {
                out.push('/');
                out.push_str(&q.to_string());
            }
        } else if q.is_one() {
            out.push('/');
            out.push_str(&wrap(&pd));
        } else {
            out.push_str(&format!("/({q}{})", paren(&pd)));
        }
        out
    }
}

fn is_monomial(p: &OmegaPoly) -> bool {
    p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1
}

fn paren(p: &OmegaPoly) -> String {
    format!("({p})")
}

fn wrap(p: &OmegaPoly) -> String {
    if is_monomial(p) {
        p.to_string()
    } else {
        paren(p)
    }
}

/// Splits `p = c · q` with `q` an integer polynomial of content 1 and
/// positive leading coefficient.
fn primitive_part(p: &OmegaPoly) -> (BigRational, OmegaPoly) {
    let mut den_lcm = BigInt::one();
    let mut num_gcd = BigInt::zero();
    for c in p.coeffs() {
        den_lcm = den_lcm.lcm(c.denom());
        num_gcd = num_gcd.gcd(c.numer());
    }
    let mut content = BigRational::new(num_gcd, den_lcm);
    if p.leading().is_some_and(|l| l.is_negative()) {
        content = -content;
    }
    let q = p.scale(&content.recip());
    (content, q)
}

impl Default for OmegaRatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<BigRational> for OmegaRatFunc {
    fn from(c: BigRational) -> Self {
        Self::constant(c)
    }
}

impl From<OmegaPoly> for OmegaRatFunc {
    fn from(p: OmegaPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for OmegaRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_display_string())
    }
}

impl fmt::Debug for OmegaRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OmegaRatFunc({self})")
    }
}

impl Add for &OmegaRatFunc {
    type Output = OmegaRatFunc;
    fn add(self, rhs: &OmegaRatFunc) -> OmegaRatFunc {
        self.add_impl(rhs)
    }
}

impl Sub for &OmegaRatFunc {
    type Output = OmegaRatFunc;
    fn sub(self, rhs: &OmegaRatFunc) -> OmegaRatFunc {
        self.add_impl(&-rhs)
    }
}

impl Mul for &OmegaRatFunc {
    type Output = OmegaRatFunc;
    fn mul(self, rhs: &OmegaRatFunc) -> OmegaRatFunc {
        self.mul_impl(rhs)
    }
}

/// Panics on division by zero; use [`OmegaRatFunc::inv`] for a checked form.
impl Div for &OmegaRatFunc {
    type Output = OmegaRatFunc;
    fn div(self, rhs: &OmegaRatFunc) -> OmegaRatFunc {
        self.mul_impl(&rhs.inv().expect("division by zero rational function"))
    }
}

impl Neg for &OmegaRatFunc {
    type Output = OmegaRatFunc;
    fn neg(self) -> OmegaRatFunc {
        OmegaRatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for OmegaRatFunc {
    type Output = OmegaRatFunc;
    fn neg(self) -> OmegaRatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for OmegaRatFunc {
            type Output = OmegaRatFunc;
            fn $m(self, rhs: OmegaRatFunc) -> OmegaRatFunc {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

#[derive(Serialize, Deserialize)]
struct RatFuncRepr {
    num: Vec<String>,
    den: Vec<String>,
}

fn poly_to_strings(p: &OmegaPoly) -> Vec<String> {
    p.coeffs().iter().map(format_rational).collect()
}

fn poly_from_strings(v: &[String]) -> Result<OmegaPoly> {
    let coeffs = v
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>>>()?;
    Ok(OmegaPoly::from_coeffs(coeffs))
}

impl Serialize for OmegaPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        poly_to_strings(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for OmegaPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        poly_from_strings(&v).map_err(D::Error::custom)
    }
}

impl Serialize for OmegaRatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RatFuncRepr {
            num: poly_to_strings(&self.num),
            den: poly_to_strings(&self.den),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for OmegaRatFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RatFuncRepr::deserialize(d)?;
        let num = poly_from_strings(&r.num).map_err(D::Error::custom)?;
        let den = poly_from_strings(&r.den).map_err(D::Error::custom)?;
        let f = OmegaRatFunc::reduce(num.clone(), den.clone()).map_err(D::Error::custom)?;
        if f.num != num || f.den != den {
            return Err(D::Error::custom(
                "rational function is not in canonical form",
            ));
        }
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::{int, rat};

    fn p(c: &[i64]) -> OmegaPoly {
        OmegaPoly::from_coeffs(c.iter().map(|&x| int(x)).collect())
    }

    fn half_omega_minus_half() -> OmegaRatFunc {
        OmegaRatFunc::linear(rat(1, 2), rat(-1, 2))
    }

    #[test]
    fn reduce_examples() {
        let f = OmegaRatFunc::reduce(p(&[-1, 0, 1]), p(&[1, 1])).unwrap();
        assert_eq!(f, OmegaRatFunc::from_poly(p(&[-1, 1])));
        let g = OmegaRatFunc::reduce(p(&[-1, 1]), p(&[2])).unwrap();
        assert_eq!(g, half_omega_minus_half());
        assert!(OmegaRatFunc::reduce(OmegaPoly::zero(), p(&[0, 1]))
            .unwrap()
            .is_zero());
        assert_eq!(
            OmegaRatFunc::reduce(p(&[3, 1]), p(&[3, 1])).unwrap(),
            OmegaRatFunc::one()
        );
        assert_eq!(
            OmegaRatFunc::reduce(p(&[1]), OmegaPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn evaluation() {
        let f = half_omega_minus_half();
        assert_eq!(f.evaluate(&int(7)).unwrap(), int(3));
        assert_eq!(f.evaluate(&int(-4)).unwrap(), rat(-5, 2));
        let g = OmegaRatFunc::reduce(p(&[1]), p(&[-7, 1])).unwrap();
        assert!(matches!(g.evaluate(&int(7)), Err(Error::Specialization(_))));
    }

    #[test]
    fn display_forms() {
        assert_eq!(half_omega_minus_half().to_string(), "(ω-1)/2");
        let h = OmegaRatFunc::reduce(p(&[8, 2]), p(&[2, 1])).unwrap();
        assert_eq!(h.to_string(), "2(ω+4)/(ω+2)");
        assert_eq!(OmegaRatFunc::omega().inv().unwrap().to_string(), "1/ω");
        let k = OmegaRatFunc::reduce(p(&[1]), p(&[-2, 2])).unwrap();
        assert_eq!(k.to_string(), "1/(2(ω-1))");
        assert_eq!((-half_omega_minus_half()).to_string(), "-(ω-1)/2");
        assert_eq!(OmegaRatFunc::from_rat(-3, 4).to_string(), "-3/4");
        assert_eq!(OmegaRatFunc::from_poly(p(&[0, 3])).to_string(), "3ω");
    }

    #[test]
    fn field_ops() {
        let a = OmegaRatFunc::reduce(p(&[1, 2]), p(&[0, 1])).unwrap();
        let b = OmegaRatFunc::reduce(p(&[3]), p(&[-1, 1])).unwrap();
        let c = &a * &b;
        assert_eq!(&c / &b, a);
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!(&a * &a.inv().unwrap(), OmegaRatFunc::one());
        assert!(OmegaRatFunc::zero().inv().is_err());
    }

    #[test]
    fn limits() {
        let f = OmegaRatFunc::reduce(p(&[8, 2]), p(&[2, 1])).unwrap();
        assert_eq!(f.limit_at_infinity(), Some(int(2)));
        assert_eq!(OmegaRatFunc::omega().limit_at_infinity(), None);
        assert_eq!(
            OmegaRatFunc::omega().inv().unwrap().limit_at_infinity(),
            Some(int(0))
        );
    }

    #[test]
    fn serde_round_trip() {
        let f = OmegaRatFunc::reduce(p(&[8, 2]), p(&[2, 1])).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"num":["8/1","2/1"],"den":["2/1","1/1"]}"#);
        let g: OmegaRatFunc = serde_json::from_str(&s).unwrap();
        assert_eq!(f, g);
        assert!(serde_json::from_str::<OmegaRatFunc>(r#"{"num":["2/1"],"den":["2/1"]}"#).is_err());
    }
}
