//! Symmetrizer, anti-symmetrizer and the fusion procedure for C(ω)[S_n].

use serde::Serialize;

use super::algfunc::rho_at;
use super::idempotents::{fusion_element, murphy_element, Evaluation};
use super::series::{Chain, Lin};
use crate::brauer::{project_symmetric_group, s_ij, BrauerElement, SymGroupElement};
use crate::error::{Error, Result};
use crate::scalars::{int, rat, BigRational, OmegaRatFunc};
use crate::tableau::{standard_fusion_constant, Partition, UpdownTableau};

/// `((1), (2), …, (n))`.
pub fn row_tableau(n: usize) -> UpdownTableau {
    let shapes = (1..=n)
        .map(|k| Partition::new(vec![k]).expect("valid"))
        .collect();
    UpdownTableau::new(shapes).expect("valid")
}

/// `((1), (1,1), …, (1^n))`.
pub fn column_tableau(n: usize) -> UpdownTableau {
    let shapes = (1..=n)
        .map(|k| Partition::new(vec![1; k]).expect("valid"))
        .collect();
    UpdownTableau::new(shapes).expect("valid")
}

fn lex_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
}

fn factorial(n: usize) -> BigRational {
    (1..=n as i64).fold(int(1), |acc, k| acc * int(k))
}

/// `Π_lex ρ_ij(arg(i, j))`.
fn lex_rho_product(n: usize, arg: impl Fn(usize, usize) -> OmegaRatFunc) -> Result<BrauerElement> {
    let mut acc = BrauerElement::identity(n);
    for (i, j) in lex_pairs(n) {
        acc = &acc * &rho_at(i, j, n, &arg(i, j))?;
    }
    Ok(acc)
}

/// `(1/n!) Π_lex ρ_ij(i − j)`.
pub fn symmetrizer_short(n: usize) -> Result<BrauerElement> {
    let p = lex_rho_product(n, |i, j| OmegaRatFunc::from_int(i as i64 - j as i64))?;
    Ok(p.scale_rational(&(int(1) / factorial(n))))
}

/// `(1/n!) Π_r (ω+2r−2)/(ω+4r−4) · Π_lex ρ_ij(2−i−j−ω/2) · Π_lex ρ_ij(i−j)`.
pub fn symmetrizer_long(n: usize) -> Result<BrauerElement> {
    let mut c = OmegaRatFunc::constant(int(1) / factorial(n));
    for r in 2..=n as i64 {
        c = &c
            * &(&OmegaRatFunc::linear(int(1), int(2 * r - 2))
                / &OmegaRatFunc::linear(int(1), int(4 * r - 4)));
    }
    let a = lex_rho_product(n, |i, j| {
        OmegaRatFunc::linear(rat(-1, 2), int(2 - i as i64 - j as i64))
    })?;
    let b = lex_rho_product(n, |i, j| OmegaRatFunc::from_int(i as i64 - j as i64))?;
    Ok((&a * &b).scale(&c))
}

/// `(1/n!) Π_r (ω−2r+2)/(ω−4r+4) · Π_lex ρ_ij(i+j−2−ω/2) · Π_lex ρ_ij(j−i)`.
pub fn antisymmetrizer_long(n: usize) -> Result<BrauerElement> {
    let mut c = OmegaRatFunc::constant(int(1) / factorial(n));
    for r in 2..=n as i64 {
        c = &c
            * &(&OmegaRatFunc::linear(int(1), int(2 - 2 * r))
                / &OmegaRatFunc::linear(int(1), int(4 - 4 * r)));
    }
    let a = lex_rho_product(n, |i, j| {
        OmegaRatFunc::linear(rat(-1, 2), int(i as i64 + j as i64 - 2))
    })?;
    let b = lex_rho_product(n, |i, j| OmegaRatFunc::from_int(j as i64 - i as i64))?;
    Ok((&a * &b).scale(&c))
}

/// `(1/n!) Π_lex (1 − s_ij/(j − i))`.
pub fn antisymmetrizer_short(n: usize) -> Result<BrauerElement> {
    let mut acc = BrauerElement::identity(n);
    for (i, j) in lex_pairs(n) {
        let mut f = BrauerElement::identity(n);
        f.add_term(
            s_ij(i, j, n)?,
            &OmegaRatFunc::constant(rat(-1, (j - i) as i64)),
        );
        acc = &acc * &f;
    }
    Ok(acc.scale_rational(&(int(1) / factorial(n))))
}

/// Symmetrizer by fusion on the one-row tableau.
pub fn symmetrizer(n: usize) -> Result<BrauerElement> {
    fusion_element(&row_tableau(n), Evaluation::Series)
}

/// Anti-symmetrizer by fusion on the one-column tableau.
pub fn antisymmetrizer(n: usize) -> Result<BrauerElement> {
    fusion_element(&column_tableau(n), Evaluation::Series)
}

/// Outcome of the fusion procedure in C(ω)[S_n].
#[derive(Clone, Debug, Serialize)]
pub struct SymFusion {
    pub tableau: UpdownTableau,
    /// Raw consecutive evaluation.
    pub value: SymGroupElement,
    /// Scalar `K` with `value = K · E_T`.
    pub constant: OmegaRatFunc,
    /// `value / K`.
    pub idempotent: SymGroupElement,
}

fn om_half() -> OmegaRatFunc {
    OmegaRatFunc::linear(rat(1, 2), int(0))
}

/// Step `r` of the consecutive evaluation of a product of factors
/// `(1 + s_ir/(v_i + v_r + ω/2))` (when `with_omega`) and `(1 − s_ir/(v_i − v_r))`.
fn sym_step(
    prev: &BrauerElement,
    r: usize,
    sigma: &[i64],
    with_omega: bool,
) -> Result<BrauerElement> {
    let sr = sigma[r - 1];
    let one = BrauerElement::identity(r);
    let mut factors = Vec::new();
    let mut den = Vec::new();
    if with_omega {
        for i in (1..r).rev() {
            // (v + a + s)/(v + a) with a = σ_i + σ_r + ω/2
            let a = &om_half() + &OmegaRatFunc::from_int(sigma[i - 1] + sr);
            let s = BrauerElement::from_diagram(s_ij(i, r, r)?);
            factors.push(vec![&one.scale(&a) + &s, one.clone()]);
            den.push(Lin::shifted(a));
        }
    }
    for i in 1..r {
        // (b − v − s)/(b − v) with b = σ_i − σ_r
        let b = OmegaRatFunc::from_int(sigma[i - 1] - sr);
        let s = BrauerElement::from_diagram(s_ij(i, r, r)?);
        factors.push(vec![&one.scale(&b) - &s, -&one]);
        den.push(Lin::reflected(b));
    }
    Chain {
        left: prev.embed(),
        factors,
        scalar_num: Vec::new(),
        scalar_den: den,
        power: 0,
    }
    .regular_value(&OmegaRatFunc::from_int(sr))
}

fn sym_value(t: &UpdownTableau, with_omega: bool) -> Result<BrauerElement> {
    let sigma = t.classical_contents()?;
    let mut e = BrauerElement::identity(1);
    for r in 2..=t.n() {
        e = sym_step(&e, r, &sigma, with_omega)?;
    }
    Ok(e)
}

/// Consecutive evaluation of `Ω_ω(v)` at `v_k = σ_k` for a standard tableau.
pub fn symmetric_group_fusion(t: &UpdownTableau) -> Result<SymFusion> {
    let value = SymGroupElement::new(sym_value(t, true)?)?;
    let target = project_symmetric_group(&murphy_element(t)?);
    let constant = value
        .as_element()
        .ratio_to(target.as_element())
        .ok_or_else(|| {
            Error::Inconsistent(format!("Ω_ω value for {t} is not proportional to E_T"))
        })?;
    let idempotent = value.scale(&constant.inv()?);
    Ok(SymFusion {
        tableau: t.clone(),
        value,
        constant,
        idempotent,
    })
}

/// Consecutive evaluation of the ω-free `Φ(u) = Π_lex (1 − s_ij/(u_i − u_j))`.
pub fn classical_fusion(t: &UpdownTableau) -> Result<SymGroupElement> {
    SymGroupElement::new(sym_value(t, false)?)
}

/// Large-ω behaviour of the symmetric-group procedure.
#[derive(Clone, Debug, Serialize)]
pub struct LimitCheck {
    /// Every coefficient of `Ω_ω|_σ` tends to the matching coefficient of `Φ|_σ`.
    pub value_limit_matches: bool,
    /// Each factor `1 + s/(v_i+v_j+ω/2)` tends to 1 coefficientwise in `1/ω`.
    pub factor_limits_trivial: bool,
    /// The constant tends to the hook product `H(λ)`.
    pub constant_limit_is_hook_product: bool,
}

impl LimitCheck {
    pub fn passed(&self) -> bool {
        self.value_limit_matches
            && self.factor_limits_trivial
            && self.constant_limit_is_hook_product
    }
}

/// Compares the ω → ∞ limit of the ω-dependent procedure with the classical one.
pub fn symmetric_group_limit_check(t: &UpdownTableau) -> Result<LimitCheck> {
    let with = sym_value(t, true)?;
    let without = sym_value(t, false)?;
    let mut value_limit_matches = true;
    let diagrams: std::collections::BTreeSet<_> =
        with.terms().keys().chain(without.terms().keys()).collect();
    for d in diagrams {
        let lim = with.coeff(d).limit_at_infinity();
        let classical = without.coeff(d).as_constant();
        if lim != classical {
            value_limit_matches = false;
        }
    }
    let sigma = t.classical_contents()?;
    let mut factor_limits_trivial = true;
    for (i, j) in lex_pairs(t.n()) {
        let a = &om_half() + &OmegaRatFunc::from_int(sigma[i - 1] + sigma[j - 1]);
        // coefficient of s_ij in the factor is 1/a, which must vanish at infinity
        if a.inv()?.limit_at_infinity() != Some(int(0)) {
            factor_limits_trivial = false;
        }
    }
    let k = standard_fusion_constant(t.shape());
    let constant_limit_is_hook_product =
        k.limit_at_infinity() == Some(BigRational::from_integer(t.shape().hook_product()));
    Ok(LimitCheck {
        value_limit_matches,
        factor_limits_trivial,
        constant_limit_is_hook_product,
    })
}
