use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::diagram::BrauerDiagram;
use super::kernel::PolyElement;
use crate::error::{Error, Result};
use crate::scalars::{BigRational, Coefficient, OmegaRatFunc, RingCoefficient};

/// Sparse C(ω)-linear combination of n-diagrams. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BrauerElement {
    n: usize,
    terms: BTreeMap<BrauerDiagram, OmegaRatFunc>,
}

impl BrauerElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_diagram(BrauerDiagram::identity(n))
    }

    pub fn from_diagram(d: BrauerDiagram) -> Self {
        Self::term(d, OmegaRatFunc::one())
    }

    pub fn term(d: BrauerDiagram, c: OmegaRatFunc) -> Self {
        let mut e = Self::zero(d.n());
        e.add_term(d, &c);
        e
    }

    pub fn scalar(n: usize, c: OmegaRatFunc) -> Self {
        Self::term(BrauerDiagram::identity(n), c)
    }

    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (BrauerDiagram, OmegaRatFunc)>,
    ) -> Result<Self> {
        let mut e = Self::zero(n);
        for (d, c) in terms {
            if d.n() != n {
                return Err(Error::SizeMismatch(n, d.n()));
            }
            e.add_term(d, &c);
        }
        Ok(e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<BrauerDiagram, OmegaRatFunc> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &BrauerDiagram) -> OmegaRatFunc {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    /// Adds `c · d` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, d: BrauerDiagram, c: &OmegaRatFunc) {
        debug_assert_eq!(d.n(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::SizeMismatch(self.n, rhs.n));
        }
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_term(d.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::SizeMismatch(self.n, rhs.n));
        }
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero(self.n));
        }
        if let Some(c) = self.as_scalar() {
            return Ok(rhs.scale(&c));
        }
        if let Some(c) = rhs.as_scalar() {
            return Ok(self.scale(&c));
        }
        let a = PolyElement::from_element(self);
        let b = PolyElement::from_element(rhs);
        Ok(a.mul(&b).to_element())
    }

    pub fn scale(&self, c: &OmegaRatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(d, a)| (d.clone(), a * c)).collect(),
        }
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        self.scale(&OmegaRatFunc::constant(c.clone()))
    }

    /// `Some(c)` when the element is `c` times the identity.
    pub fn as_scalar(&self) -> Option<OmegaRatFunc> {
        match self.terms.iter().next() {
            None => Some(OmegaRatFunc::zero()),
            Some((d, c)) if self.terms.len() == 1 && d.is_identity() => Some(c.clone()),
            _ => None,
        }
    }

    /// Some scalar `h` with `self = h · other`, when one exists.
    pub fn ratio_to(&self, other: &Self) -> Option<OmegaRatFunc> {
        if other.is_zero() {
            return self.is_zero().then(OmegaRatFunc::zero);
        }
        let (d, c) = other.terms.iter().next().expect("nonzero");
        let h = &self.coeff(d) / c;
        (other.scale(&h) == *self).then_some(h)
    }

    /// Image under the embedding B_n → B_{n+1}.
    pub fn embed(&self) -> Self {
        Self {
            n: self.n + 1,
            terms: self
                .terms
                .iter()
                .map(|(d, c)| (d.embed(), c.clone()))
                .collect(),
        }
    }

    /// Image under the anti-automorphism that flips diagrams upside down.
    pub fn flip(&self) -> Self {
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(d, c)| (d.flip(), c.clone()))
                .collect(),
        }
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn map_coeffs(&self, mut f: impl FnMut(&OmegaRatFunc) -> OmegaRatFunc) -> Self {
        let mut out = Self::zero(self.n);
        for (d, c) in &self.terms {
            out.add_term(d.clone(), &f(c));
        }
        out
    }

    /// Largest total degree appearing in numerators or denominators; a size gauge for reports.
    pub fn max_degree(&self) -> usize {
        self.terms
            .values()
            .map(|c| {
                c.num()
                    .degree()
                    .unwrap_or(0)
                    .max(c.den().degree().unwrap_or(0))
            })
            .max()
            .unwrap_or(0)
    }

    /// Debug check that no coefficient is stored as zero.
    pub fn is_pruned(&self) -> bool {
        self.terms.values().all(|c| !c.is_zero())
    }
}

impl Add for &BrauerElement {
    type Output = BrauerElement;
    fn add(self, rhs: &BrauerElement) -> BrauerElement {
        self.checked_add(rhs).expect("size mismatch in Brauer sum")
    }
}

impl Sub for &BrauerElement {
    type Output = BrauerElement;
    fn sub(self, rhs: &BrauerElement) -> BrauerElement {
        self.checked_add(&-rhs)
            .expect("size mismatch in Brauer difference")
    }
}

impl Mul for &BrauerElement {
    type Output = BrauerElement;
    fn mul(self, rhs: &BrauerElement) -> BrauerElement {
        self.checked_mul(rhs)
            .expect("size mismatch in Brauer product")
    }
}

impl Neg for &BrauerElement {
    type Output = BrauerElement;
    fn neg(self) -> BrauerElement {
        BrauerElement {
            n: self.n,
            terms: self.terms.iter().map(|(d, c)| (d.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BrauerElement {
            type Output = BrauerElement;
            fn $m(self, rhs: BrauerElement) -> BrauerElement {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Coefficient for BrauerElement {
    fn zero_like(&self) -> Self {
        Self::zero(self.n)
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
        self.scale(c)
    }
}

impl RingCoefficient for BrauerElement {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl fmt::Debug for BrauerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BrauerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(d, c)| format!("[{c}]{d}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    diagram: BrauerDiagram,
    coeff: OmegaRatFunc,
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    n: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for BrauerElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementRepr {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(d, c)| TermRepr {
                    diagram: d.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BrauerElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = ElementRepr::deserialize(d)?;
        let mut terms = BTreeMap::new();
        for t in r.terms {
            if t.diagram.n() != r.n {
                return Err(D::Error::custom("diagram size differs from element size"));
            }
            if t.coeff.is_zero() {
                return Err(D::Error::custom("zero coefficient stored"));
            }
            if terms.insert(t.diagram, t.coeff).is_some() {
                return Err(D::Error::custom("duplicate diagram"));
            }
        }
        Ok(Self { n: r.n, terms })
    }
}
