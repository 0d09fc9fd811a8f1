//! Fraction-free products of Brauer algebra elements.
//!
//! An element is written as `scale · Σ p_d · d` with integer polynomials
//! `p_d` in ω and a single rational-function prefactor. Products then need
//! only integer polynomial arithmetic; the gcd work is deferred to one
//! reduction per output diagram.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::diagram::{enumerate_diagrams, mul_partners, BrauerDiagram};
use super::element::BrauerElement;
use crate::scalars::{IntPoly, OmegaPoly, OmegaRatFunc};

/// Largest n with a precomputed multiplication table (945² entries at n = 5).
const TABLE_MAX_N: usize = 5;

/// Indexed diagram basis with a full multiplication table.
pub(crate) struct DiagramBasis {
    pub diagrams: Vec<BrauerDiagram>,
    pub index: HashMap<BrauerDiagram, u32>,
    /// `table[i * len + j] = (loops, k)` for `d_i · d_j = ω^loops d_k`.
    table: Vec<(u8, u32)>,
}

impl DiagramBasis {
    fn build(n: usize) -> Self {
        let diagrams = enumerate_diagrams(n);
        let index: HashMap<_, _> = diagrams
            .iter()
            .enumerate()
            .map(|(i, d)| (d.clone(), i as u32))
            .collect();
        let partners: Vec<Vec<u8>> = diagrams.iter().map(BrauerDiagram::partners).collect();
        let len = diagrams.len();
        let mut table = Vec::with_capacity(len * len);
        for p1 in &partners {
            for p2 in &partners {
                let (loops, d) = mul_partners(n, p1, p2);
                table.push((loops as u8, index[&d]));
            }
        }
        Self {
            diagrams,
            index,
            table,
        }
    }

    #[inline]
    fn product(&self, i: u32, j: u32) -> (u8, u32) {
        self.table[i as usize * self.diagrams.len() + j as usize]
    }
}

/// Shared, lazily built basis for `n ≤ 5`; `None` above that.
pub(crate) fn basis(n: usize) -> Option<Arc<DiagramBasis>> {
    if n == 0 || n > TABLE_MAX_N {
        return None;
    }
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<DiagramBasis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("basis cache poisoned");
    Some(
        guard
            .entry(n)
            .or_insert_with(|| Arc::new(DiagramBasis::build(n)))
            .clone(),
    )
}

/// `scale · Σ p_d d` with integer-polynomial numerators.
#[derive(Clone, Debug)]
pub struct PolyElement {
    n: usize,
    scale: OmegaRatFunc,
    terms: Vec<(BrauerDiagram, IntPoly)>,
}

impl PolyElement {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Splits an element over a common denominator.
    pub fn from_element(e: &BrauerElement) -> Self {
        let n = e.n();
        let mut den = OmegaPoly::one();
        for c in e.terms().values() {
            if !c.den().is_one() {
                den = poly_lcm(&den, c.den());
            }
        }
        let mut rational = Vec::with_capacity(e.len());
        let mut int_den = BigInt::one();
        for (d, c) in e.terms() {
            let factor = den.exact_div(c.den()).expect("lcm is a multiple");
            let p = c.num() * &factor;
            for a in p.coeffs() {
                int_den = int_den.lcm(a.denom());
            }
            rational.push((d.clone(), p));
        }
        let mut content = BigInt::zero();
        let mut terms = Vec::with_capacity(rational.len());
        for (d, p) in rational {
            let (k, q) = IntPoly::from_omega_poly(&p);
            let q = q.scale(&(&int_den / k));
            for a in q.coeffs() {
                content = content.gcd(a);
            }
            terms.push((d, q));
        }
        if !content.is_zero() && !content.is_one() {
            for (_, q) in &mut terms {
                *q = IntPoly::from_coeffs(q.coeffs().iter().map(|a| a / &content).collect());
            }
        }
        let scale_num = if content.is_zero() {
            BigInt::one()
        } else {
            content
        };
        let scale = OmegaRatFunc::reduce(
            OmegaPoly::constant(scale_num.into()),
            den.scale(&int_den.into()),
        )
        .expect("nonzero denominator");
        Self { n, scale, terms }
    }

    /// Back to reduced rational-function coefficients.
    pub fn to_element(&self) -> BrauerElement {
        let mut out = BrauerElement::zero(self.n);
        for (d, p) in &self.terms {
            if p.is_zero() {
                continue;
            }
            let c = &self.scale * &OmegaRatFunc::from_poly(p.to_omega_poly());
            out.add_term(d.clone(), &c);
        }
        out
    }

    /// True when every numerator vanishes, without any rational reduction.
    pub fn is_zero(&self) -> bool {
        self.scale.is_zero() || self.terms.iter().all(|(_, p)| p.is_zero())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "size mismatch in Brauer product");
        let scale = &self.scale * &rhs.scale;
        let terms = match basis(self.n) {
            Some(b) => mul_indexed(&b, &self.terms, &rhs.terms),
            None => mul_direct(self.n, &self.terms, &rhs.terms),
        };
        Self {
            n: self.n,
            scale,
            terms,
        }
    }
}

fn poly_lcm(a: &OmegaPoly, b: &OmegaPoly) -> OmegaPoly {
    let g = crate::scalars::poly_gcd(a, b).expect("nonzero");
    (a * &b.exact_div(&g).expect("gcd divides")).monic()
}

fn mul_indexed(
    b: &DiagramBasis,
    lhs: &[(BrauerDiagram, IntPoly)],
    rhs: &[(BrauerDiagram, IntPoly)],
) -> Vec<(BrauerDiagram, IntPoly)> {
    let li: Vec<(u32, &IntPoly)> = lhs.iter().map(|(d, p)| (b.index[d], p)).collect();
    let ri: Vec<(u32, &IntPoly)> = rhs.iter().map(|(d, p)| (b.index[d], p)).collect();
    let mut acc: Vec<IntPoly> = vec![IntPoly::zero(); b.diagrams.len()];
    for &(i, p) in &li {
        for &(j, q) in &ri {
            let (loops, k) = b.product(i, j);
            acc[k as usize].add_shifted_product(loops as usize, p, q);
        }
    }
    acc.into_iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .map(|(k, p)| (b.diagrams[k].clone(), p))
        .collect()
}

fn mul_direct(
    n: usize,
    lhs: &[(BrauerDiagram, IntPoly)],
    rhs: &[(BrauerDiagram, IntPoly)],
) -> Vec<(BrauerDiagram, IntPoly)> {
    let rp: Vec<Vec<u8>> = rhs.iter().map(|(d, _)| d.partners()).collect();
    let mut acc: HashMap<BrauerDiagram, IntPoly> = HashMap::new();
    for (d1, p) in lhs {
        let p1 = d1.partners();
        for ((_, q), p2) in rhs.iter().zip(&rp) {
            let (loops, d) = mul_partners(n, &p1, p2);
            acc.entry(d).or_default().add_shifted_product(loops, p, q);
        }
    }
    let mut out: Vec<_> = acc.into_iter().filter(|(_, p)| !p.is_zero()).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}
