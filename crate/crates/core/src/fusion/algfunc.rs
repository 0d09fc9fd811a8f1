//! Rational functions of one spectral variable `u` with values in B_n(ω).

use crate::brauer::{eps_ij, s_ij, BrauerElement};
use crate::error::{Error, Result};
use crate::scalars::{OmegaRatFunc, UniPoly};

/// `κ = ω/2 − 1`.
pub fn kappa() -> OmegaRatFunc {
    OmegaRatFunc::linear(crate::scalars::rat(1, 2), crate::scalars::int(-1))
}

/// `num(u) / den(u)` with an algebra-valued numerator and a scalar denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgValuedRatFunc {
    n: usize,
    num: UniPoly<BrauerElement>,
    den: UniPoly<OmegaRatFunc>,
}

impl AlgValuedRatFunc {
    /// Builds `num/den` and cancels the common scalar factor.
    pub fn new(n: usize, num: UniPoly<BrauerElement>, den: UniPoly<OmegaRatFunc>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut f = Self { n, num, den };
        f.cancel_content()?;
        Ok(f)
    }

    /// The constant function with value `a`.
    pub fn constant(a: BrauerElement) -> Self {
        Self {
            n: a.n(),
            num: UniPoly::constant(a),
            den: UniPoly::one(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num(&self) -> &UniPoly<BrauerElement> {
        &self.num
    }

    pub fn den(&self) -> &UniPoly<OmegaRatFunc> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn cancel_content(&mut self) -> Result<()> {
        if self.num.is_zero() {
            self.den = UniPoly::one();
            return Ok(());
        }
        let mut g = self.den.clone();
        // Each diagram's coefficient is a scalar polynomial in u; intersect their gcds with den.
        let mut per_diagram: std::collections::BTreeMap<_, Vec<OmegaRatFunc>> = Default::default();
        let deg = self.num.coeffs().len();
        for (k, c) in self.num.coeffs().iter().enumerate() {
            for (d, a) in c.terms() {
                per_diagram
                    .entry(d.clone())
                    .or_insert_with(|| vec![OmegaRatFunc::zero(); deg])[k] = a.clone();
            }
        }
        for coeffs in per_diagram.into_values() {
            if g.degree() == Some(0) {
                break;
            }
            g = g.gcd(&UniPoly::from_coeffs(coeffs))?;
        }
        if g.degree().unwrap_or(0) > 0 {
            let den = self.den.div_rem(&g)?.0;
            let num = divide_algebra_poly(&self.num, &g)?;
            self.num = num;
            self.den = den;
        }
        // Normalize so the denominator is monic.
        let lead = self.den.coeffs().last().expect("nonzero").clone();
        if !lead.is_one() {
            let inv = lead.inv()?;
            self.den = self.den.scale(&inv);
            self.num = self.num.scale(&inv);
        }
        Ok(())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::SizeMismatch(self.n, rhs.n));
        }
        Self::new(self.n, self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    /// Product without the gcd normalization; cheaper when only the value at a point is wanted.
    pub fn mul_unreduced(&self, rhs: &Self) -> Self {
        Self {
            n: self.n,
            num: self.num.mul(&rhs.num),
            den: self.den.mul(&rhs.den),
        }
    }

    /// Multiplies by the scalar function `p/q`.
    pub fn mul_scalar(&self, p: &UniPoly<OmegaRatFunc>, q: &UniPoly<OmegaRatFunc>) -> Result<Self> {
        Self::new(self.n, self.num.mul_scalar_poly(p), self.den.mul(q))
    }

    /// Same as [`Self::mul_scalar`] without normalization.
    pub fn mul_scalar_unreduced(
        &self,
        p: &UniPoly<OmegaRatFunc>,
        q: &UniPoly<OmegaRatFunc>,
    ) -> Self {
        Self {
            n: self.n,
            num: self.num.mul_scalar_poly(p),
            den: self.den.mul(q),
        }
    }

    /// Left multiplication by a constant algebra element.
    pub fn left_mul(&self, a: &BrauerElement) -> Self {
        let num = UniPoly::from_coeffs(self.num.coeffs().iter().map(|c| a * c).collect());
        Self {
            n: self.n,
            num,
            den: self.den.clone(),
        }
    }

    /// Value at a regular point.
    pub fn eval(&self, u: &OmegaRatFunc) -> Result<BrauerElement> {
        let d = self.den.eval(u);
        if d.is_zero() {
            return Err(Error::Pole(u.to_string()));
        }
        let mut acc = BrauerElement::zero(self.n);
        for c in self.num.coeffs().iter().rev() {
            acc = &acc.scale(u) + c;
        }
        Ok(acc.scale(&d.inv()?))
    }

    /// True when `self` and `rhs` agree as rational functions.
    pub fn same_function(&self, rhs: &Self) -> bool {
        self.num.mul_scalar_poly(&rhs.den) == rhs.num.mul_scalar_poly(&self.den)
    }
}

fn divide_algebra_poly(
    num: &UniPoly<BrauerElement>,
    g: &UniPoly<OmegaRatFunc>,
) -> Result<UniPoly<BrauerElement>> {
    let dg = g.degree().ok_or(Error::DivisionByZero)?;
    let lead_inv = g.coeffs()[dg].inv()?;
    let mut rem = num.coeffs().to_vec();
    let Some(template) = rem.first().cloned() else {
        return Ok(UniPoly::zero());
    };
    let mut quot = vec![BrauerElement::zero(template.n()); rem.len().saturating_sub(dg)];
    while rem.len() > dg {
        let top = rem.len() - 1;
        let q = rem[top].scale(&lead_inv);
        for (k, c) in g.coeffs().iter().enumerate() {
            let idx = top - dg + k;
            rem[idx] = &rem[idx] - &q.scale(c);
        }
        quot[top - dg] = q;
        rem.pop();
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(Error::Inconsistent(
            "scalar gcd does not divide the numerator".into(),
        ));
    }
    Ok(UniPoly::from_coeffs(quot))
}

/// Value at `u = c` of `(u − c)^p · f(u)` after cancelling the common power of `(u − c)`.
///
/// With `m` the order of the denominator at `c` and `z` that of the numerator,
/// returns the leading ratio when `z + p = m`, zero when `z + p > m`, and a
/// regularity error otherwise.
pub fn evaluate_with_cancellation(
    f: &AlgValuedRatFunc,
    c: &OmegaRatFunc,
    p: i64,
) -> Result<BrauerElement> {
    if f.num.is_zero() {
        return Ok(BrauerElement::zero(f.n));
    }
    let den = f.den.taylor_shift(c);
    let m = den.lowest_order().ok_or(Error::DivisionByZero)?;
    let num = f.num.taylor_shift(c);
    let z = num.lowest_order().expect("nonzero numerator");
    let total = z as i64 + p;
    if total < m as i64 {
        return Err(Error::FusionRegularity {
            point: c.to_string(),
            numerator_order: z,
            exponent: p,
            denominator_order: m,
        });
    }
    if total > m as i64 {
        return Ok(BrauerElement::zero(f.n));
    }
    Ok(num.coeffs()[z].scale(&den.coeffs()[m].inv()?))
}

/// Affine argument `w = sign·u + offset`.
#[derive(Clone, Debug, PartialEq)]
pub struct Shift {
    pub sign: i8,
    pub offset: OmegaRatFunc,
}

impl Shift {
    pub fn new(sign: i8, offset: OmegaRatFunc) -> Self {
        assert!(sign == 1 || sign == -1, "shift sign must be ±1");
        Self { sign, offset }
    }

    /// `w` as a polynomial in `u`.
    pub fn as_poly(&self) -> UniPoly<OmegaRatFunc> {
        UniPoly::linear(
            OmegaRatFunc::from_int(self.sign as i64),
            self.offset.clone(),
        )
    }
}

/// `ρ_ij(w) = 1 − s_ij/w + ε_ij/(w − κ)` at `w = sign·u + offset`, stored as
/// `[(w−κ)w − (w−κ)s_ij + w ε_ij] / [w(w−κ)]`.
pub fn rho(i: usize, j: usize, n: usize, shift: &Shift) -> Result<AlgValuedRatFunc> {
    let s = BrauerElement::from_diagram(s_ij(i, j, n)?);
    let e = BrauerElement::from_diagram(eps_ij(i, j, n)?);
    let w = shift.as_poly();
    let wk = w.sub(&UniPoly::constant(kappa()));
    let one = UniPoly::constant(BrauerElement::identity(n));
    let num = one
        .mul_scalar_poly(&wk.mul(&w))
        .sub(&UniPoly::constant(s).mul_scalar_poly(&wk))
        .add(&UniPoly::constant(e).mul_scalar_poly(&w));
    Ok(AlgValuedRatFunc {
        n,
        num,
        den: w.mul(&wk),
    })
}

/// `ρ_ij(w)` at a fixed argument.
pub fn rho_at(i: usize, j: usize, n: usize, w: &OmegaRatFunc) -> Result<BrauerElement> {
    let wk = w - &kappa();
    if w.is_zero() || wk.is_zero() {
        return Err(Error::Pole(format!("rho_{i}{j} at {w}")));
    }
    let mut out = BrauerElement::identity(n);
    out.add_term(s_ij(i, j, n)?, &-&w.inv()?);
    out.add_term(eps_ij(i, j, n)?, &wk.inv()?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::{gen_eps, gen_s};

    fn x() -> OmegaRatFunc {
        OmegaRatFunc::from_int(1)
    }

    #[test]
    fn cancellation_examples() {
        let n = 2;
        let c = OmegaRatFunc::omega();
        let xel = BrauerElement::from_diagram(gen_eps(1, n).unwrap());
        let lin = UniPoly::linear(x(), -&c);
        let f = AlgValuedRatFunc::new(
            n,
            UniPoly::constant(xel.clone()).mul_scalar_poly(&lin),
            lin.clone(),
        )
        .unwrap();
        // The common factor is gone after normalization.
        assert_eq!(f.den(), &UniPoly::one());
        assert_eq!(evaluate_with_cancellation(&f, &c, 0).unwrap(), xel);
        let g = AlgValuedRatFunc {
            n,
            num: UniPoly::constant(xel.clone()),
            den: lin,
        };
        assert_eq!(evaluate_with_cancellation(&g, &c, 1).unwrap(), xel);
        assert!(matches!(
            evaluate_with_cancellation(&g, &c, 0),
            Err(Error::FusionRegularity { .. })
        ));
        assert!(evaluate_with_cancellation(&g, &c, 2).unwrap().is_zero());
    }

    #[test]
    fn rho_matches_pointwise_value() {
        let f = rho(1, 2, 2, &Shift::new(1, OmegaRatFunc::zero())).unwrap();
        let w = OmegaRatFunc::from_rat(3, 7);
        assert_eq!(f.eval(&w).unwrap(), rho_at(1, 2, 2, &w).unwrap());
    }

    #[test]
    fn rho_at_minus_one_is_absorbing() {
        for n in 2..=4 {
            for k in 1..n {
                let r = rho_at(k, k + 1, n, &OmegaRatFunc::from_int(-1)).unwrap();
                let e = BrauerElement::from_diagram(gen_eps(k, n).unwrap());
                let s = BrauerElement::from_diagram(gen_s(k, n).unwrap());
                assert!((&e * &r).is_zero());
                assert_eq!(&s * &r, r);
            }
        }
    }
}
