use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use super::algfunc::{evaluate_with_cancellation, kappa, rho, AlgValuedRatFunc, Shift};
use super::series::{Chain, Lin};
use crate::brauer::{eps_ij, jucys_murphy, s_ij, BrauerElement};
use crate::error::{Error, Result};
use crate::scalars::{OmegaRatFunc, UniPoly};
use crate::tableau::{branching_contents, exponents, UpdownTableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Murphy,
    Fusion,
    FusionExponents,
}

/// An idempotent (or its scalar multiple) attached to a tableau.
#[derive(Clone, Debug, Serialize)]
pub struct IdempotentRecord {
    pub tableau: UpdownTableau,
    pub method: Method,
    pub element: BrauerElement,
    pub h: Option<OmegaRatFunc>,
}

/// How a single fusion step is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Evaluation {
    /// Truncated Taylor expansion at the evaluation point.
    #[default]
    Series,
    /// Full one-variable rational function, then cancellation.
    Reference,
}

fn murphy_cache() -> &'static Mutex<HashMap<UpdownTableau, BrauerElement>> {
    static CACHE: OnceLock<Mutex<HashMap<UpdownTableau, BrauerElement>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `E_T` via `E_T = E_U Π_i (x_n − a_i)/(c_n − a_i)`; results are memoized.
pub fn murphy_element(t: &UpdownTableau) -> Result<BrauerElement> {
    if let Some(e) = murphy_cache().lock().expect("cache poisoned").get(t) {
        return Ok(e.clone());
    }
    let n = t.n();
    let e = if n == 1 {
        BrauerElement::identity(1)
    } else {
        let prev = murphy_element(&t.prefix(n - 1)?)?.embed();
        let step = t.step(n);
        let c = step.content();
        let x = jucys_murphy(n, n)?;
        let mut acc = prev;
        for a in branching_contents(&t.shape_at(n - 1), step.cell)? {
            let factor = &(&x - &BrauerElement::scalar(n, a.clone())).scale(&(&c - &a).inv()?);
            acc = &acc * factor;
        }
        acc
    };
    murphy_cache()
        .lock()
        .expect("cache poisoned")
        .insert(t.clone(), e.clone());
    Ok(e)
}

pub fn murphy_idempotent(t: &UpdownTableau) -> Result<IdempotentRecord> {
    Ok(IdempotentRecord {
        tableau: t.clone(),
        method: Method::Murphy,
        element: murphy_element(t)?,
        h: None,
    })
}

/// Taylor coefficients in `v` of the numerator of `ρ_ir(w_0 − v)`, plus its two denominator factors.
fn rho_factor(i: usize, r: usize, w0: &OmegaRatFunc) -> Result<(Vec<BrauerElement>, [Lin; 2])> {
    let k = kappa();
    let wk = w0 - &k;
    let s = BrauerElement::from_diagram(s_ij(i, r, r)?);
    let e = BrauerElement::from_diagram(eps_ij(i, r, r)?);
    let one = BrauerElement::identity(r);
    let n0 = &(&one.scale(&(&wk * w0)) - &s.scale(&wk)) + &e.scale(w0);
    let two_w0_minus_k = &(w0 + w0) - &k;
    let n1 = &(&s - &e) - &one.scale(&two_w0_minus_k);
    Ok((
        vec![n0, n1, one],
        [Lin::reflected(w0.clone()), Lin::reflected(wk)],
    ))
}

/// Offsets `w_0` of the chain `ρ_{r−1,r}(κ−c_{r−1}−u)⋯ρ_{1r}(κ−c_1−u)·ρ_{1r}(c_1−u)⋯ρ_{r−1,r}(c_{r−1}−u)`,
/// expressed as `w = offset − u`, in multiplication order with the strand index.
fn chain_offsets(contents: &[OmegaRatFunc], r: usize) -> Vec<(usize, OmegaRatFunc)> {
    let k = kappa();
    let mut out: Vec<(usize, OmegaRatFunc)> =
        (1..r).rev().map(|i| (i, &k - &contents[i - 1])).collect();
    out.extend((1..r).map(|i| (i, contents[i - 1].clone())));
    out
}

/// Scalar prefactor `(u−c_r)(u+c_1−κ)/((u−c_1)(u+c_r−κ)) Π_{i<r} (u−c_i)²/((u−c_i)²−1)`
/// as linear factors in `v = u − c_r`.
fn prefactor(contents: &[OmegaRatFunc], r: usize) -> (Vec<Lin>, Vec<Lin>) {
    let k = kappa();
    let cr = &contents[r - 1];
    let c1 = &contents[0];
    let one = OmegaRatFunc::one();
    let mut num = vec![
        Lin::shifted(OmegaRatFunc::zero()),
        Lin::shifted(&(cr + c1) - &k),
    ];
    let mut den = vec![Lin::shifted(cr - c1), Lin::shifted(&(cr + cr) - &k)];
    for ci in &contents[..r - 1] {
        let d = cr - ci;
        num.push(Lin::shifted(d.clone()));
        num.push(Lin::shifted(d.clone()));
        den.push(Lin::shifted(&d - &one));
        den.push(Lin::shifted(&d + &one));
    }
    (num, den)
}

fn lin_in_u(l: &Lin, cr: &OmegaRatFunc) -> UniPoly<OmegaRatFunc> {
    // a·v + b with v = u − c_r
    UniPoly::linear(l.a.clone(), &l.b - &(&l.a * cr))
}

/// One step of consecutive evaluation at `u = c_r`.
///
/// `prev` lives in B_{r−1}. With `normalized` the scalar prefactor is
/// included and `power` should be 0; otherwise `power` is the exponent `p_r`.
pub fn fusion_step(
    prev: &BrauerElement,
    r: usize,
    contents: &[OmegaRatFunc],
    normalized: bool,
    power: i64,
    how: Evaluation,
) -> Result<BrauerElement> {
    if r < 2 || contents.len() < r || prev.n() + 1 != r {
        return Err(Error::IndexOutOfRange(format!(
            "fusion step {r} from B_{}",
            prev.n()
        )));
    }
    let cr = &contents[r - 1];
    let left = prev.embed();
    let (mut scalar_num, mut scalar_den) = if normalized {
        prefactor(contents, r)
    } else {
        (Vec::new(), Vec::new())
    };
    match how {
        Evaluation::Series => {
            let mut factors = Vec::new();
            for (i, offset) in chain_offsets(contents, r) {
                let (coeffs, dens) = rho_factor(i, r, &(&offset - cr))?;
                factors.push(coeffs);
                scalar_den.extend(dens);
            }
            Chain {
                left,
                factors,
                scalar_num,
                scalar_den,
                power,
            }
            .regular_value(cr)
        }
        Evaluation::Reference => {
            let mut f = AlgValuedRatFunc::constant(left);
            for (i, offset) in chain_offsets(contents, r) {
                f = f.mul_unreduced(&rho(i, r, r, &Shift::new(-1, offset))?);
            }
            let p = scalar_num
                .drain(..)
                .fold(UniPoly::one(), |acc, l| acc.mul(&lin_in_u(&l, cr)));
            let q = scalar_den
                .drain(..)
                .fold(UniPoly::one(), |acc, l| acc.mul(&lin_in_u(&l, cr)));
            let f = f.mul_scalar(&p, &q)?;
            evaluate_with_cancellation(&f, cr, power)
        }
    }
}

/// `E_T` by consecutive evaluation of the normalized fusion function.
pub fn fusion_element(t: &UpdownTableau, how: Evaluation) -> Result<BrauerElement> {
    let contents = t.contents();
    let mut e = BrauerElement::identity(1);
    for r in 2..=t.n() {
        e = fusion_step(&e, r, &contents, true, 0, how)?;
    }
    Ok(e)
}

pub fn fusion_idempotent(t: &UpdownTableau) -> Result<IdempotentRecord> {
    Ok(IdempotentRecord {
        tableau: t.clone(),
        method: Method::Fusion,
        element: fusion_element(t, Evaluation::Series)?,
        h: None,
    })
}

/// Consecutive evaluation of the bare product with `(u_r − c_r)^{p_r}` inserted
/// before each step. Returns the value and the scalar `h` with `value = h·E_T`.
pub fn fusion_with_exponents_using(
    t: &UpdownTableau,
    how: Evaluation,
) -> Result<(BrauerElement, OmegaRatFunc)> {
    let contents = t.contents();
    let p = exponents(t);
    let mut e = BrauerElement::identity(1);
    for r in 2..=t.n() {
        e = fusion_step(&e, r, &contents, false, p[r - 1], how)?;
    }
    let target = murphy_element(t)?;
    let h = e.ratio_to(&target).ok_or_else(|| {
        Error::Inconsistent(format!("value for {t} is not a scalar multiple of E_T"))
    })?;
    Ok((e, h))
}

pub fn fusion_with_exponents(t: &UpdownTableau) -> Result<IdempotentRecord> {
    let (element, h) = fusion_with_exponents_using(t, Evaluation::Series)?;
    Ok(IdempotentRecord {
        tableau: t.clone(),
        method: Method::FusionExponents,
        element,
        h: Some(h),
    })
}
