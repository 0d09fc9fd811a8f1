//! Verification suites for the idempotents and the ρ-factors.

use serde_json::json;

use super::algfunc::{kappa, rho, rho_at, AlgValuedRatFunc, Shift};
use super::closed_forms::{
    antisymmetrizer, antisymmetrizer_long, antisymmetrizer_short, symmetric_group_fusion,
    symmetric_group_limit_check, symmetrizer, symmetrizer_long, symmetrizer_short,
};
use super::idempotents::{fusion_element, fusion_with_exponents_using, murphy_element, Evaluation};
use crate::brauer::{jucys_murphy, project_symmetric_group, s_ij, BrauerElement};
use crate::error::Result;
use crate::report::{element_residual, ratfunc_residual, CheckResult, Report};
use crate::sampling::RationalSampler;
use crate::scalars::{BigRational, OmegaRatFunc, UniPoly};
use crate::tableau::{enumerate_updown, standard_fusion_constant, UpdownTableau};

fn residual_check(
    name: &str,
    params: serde_json::Value,
    a: &BrauerElement,
    b: &BrauerElement,
) -> CheckResult {
    CheckResult::new(name, params, element_residual(a, b))
}

/// Fusion against the Murphy recurrence for the given tableaux.
pub fn verify_fusion_matches_murphy(tableaux: &[UpdownTableau]) -> Result<Report> {
    let mut report = Report::new("fusion-vs-murphy", None);
    for t in tableaux {
        let f = fusion_element(t, Evaluation::Series)?;
        let m = murphy_element(t)?;
        report.push(residual_check(
            "fusion = murphy",
            json!({ "tableau": t.to_string() }),
            &f,
            &m,
        ));
    }
    Ok(report)
}

/// Idempotency, orthogonality, completeness, the eigenvalue property and
/// one-step refinement for every updown tableau of length `n`.
pub fn verify_idempotent_system(n: usize) -> Result<Report> {
    let mut report = Report::new("idempotent-system", None);
    let ts = enumerate_updown(n, None);
    let es: Vec<BrauerElement> = ts.iter().map(murphy_element).collect::<Result<_>>()?;
    let zero = BrauerElement::zero(n);
    for (a, (t, e)) in ts.iter().zip(&es).enumerate() {
        let p = json!({ "tableau": t.to_string() });
        report.push(residual_check("E_T^2 = E_T", p.clone(), &(e * e), e));
        for (b, (t2, e2)) in ts.iter().zip(&es).enumerate() {
            if a != b {
                report.push(residual_check(
                    "E_T E_T' = 0",
                    json!({ "tableau": t.to_string(), "other": t2.to_string() }),
                    &(e * e2),
                    &zero,
                ));
            }
        }
        for (r, c) in t.contents().iter().enumerate() {
            let x = jucys_murphy(r + 1, n)?;
            let ce = e.scale(c);
            let pr = json!({ "tableau": t.to_string(), "r": r + 1 });
            report.push(residual_check(
                "x_r E_T = c_r E_T",
                pr.clone(),
                &(&x * e),
                &ce,
            ));
            report.push(residual_check("E_T x_r = c_r E_T", pr, &(e * &x), &ce));
        }
    }
    let total = es.iter().fold(BrauerElement::zero(n), |acc, e| &acc + e);
    report.push(residual_check(
        "sum of E_T = 1",
        json!({ "n": n, "tableaux": ts.len() }),
        &total,
        &BrauerElement::identity(n),
    ));
    if n >= 2 {
        for u in enumerate_updown(n - 1, None) {
            let sum = ts
                .iter()
                .zip(&es)
                .filter(|(t, _)| t.shapes()[..n - 1] == *u.shapes())
                .fold(BrauerElement::zero(n), |acc, (_, e)| &acc + e);
            report.push(residual_check(
                "E_U = sum of E_T over one-step extensions",
                json!({ "prefix": u.to_string() }),
                &murphy_element(&u)?.embed(),
                &sum,
            ));
        }
    }
    Ok(report)
}

/// Exponent-regularized evaluation against `h(T)·E_T` for standard tableaux,
/// where `h(T)` is the closed form `2ⁿ C_λ(ω/4) H(λ) / C_λ(ω/2)`.
pub fn verify_standard_constants(n: usize) -> Result<Report> {
    let mut report = Report::new("standard-constants", None);
    for t in enumerate_updown(n, None)
        .into_iter()
        .filter(UpdownTableau::is_standard)
    {
        let (value, _) = fusion_with_exponents_using(&t, Evaluation::Series)?;
        let expected = murphy_element(&t)?.scale(&standard_fusion_constant(t.shape()));
        report.push(residual_check(
            "raw evaluation = 2^n C(ω/4) H / C(ω/2) · E_T",
            json!({ "tableau": t.to_string() }),
            &value,
            &expected,
        ));
    }
    Ok(report)
}

/// The C(ω)[S_n] procedure: constant, normalized idempotent and ω → ∞ limit.
pub fn verify_symmetric_group(n: usize) -> Result<Report> {
    let mut report = Report::new("symgroup", None);
    for t in enumerate_updown(n, None)
        .into_iter()
        .filter(UpdownTableau::is_standard)
    {
        let p = json!({ "tableau": t.to_string() });
        let sf = symmetric_group_fusion(&t)?;
        let k = standard_fusion_constant(t.shape());
        report.push(CheckResult::new(
            "constant = 2^n C(ω/4) H / C(ω/2)",
            p.clone(),
            ratfunc_residual(&(&sf.constant - &k)),
        ));
        let target = project_symmetric_group(&murphy_element(&t)?);
        report.push(residual_check(
            "normalized value = projected E_T",
            p.clone(),
            sf.idempotent.as_element(),
            target.as_element(),
        ));
        let lim = symmetric_group_limit_check(&t)?;
        report.push(CheckResult::flag(
            "omega -> infinity recovers classical fusion",
            p,
            lim.passed(),
        ));
    }
    Ok(report)
}

/// Fusion outputs for the one-row and one-column tableaux against the closed forms.
pub fn verify_closed_forms(n: usize) -> Result<Report> {
    let mut report = Report::new("closed-forms", None);
    let p = json!({ "n": n });
    let s = symmetrizer(n)?;
    report.push(residual_check(
        "S_n fusion = long product",
        p.clone(),
        &s,
        &symmetrizer_long(n)?,
    ));
    report.push(residual_check(
        "S_n fusion = (1/n!) prod rho_ij(i-j)",
        p.clone(),
        &s,
        &symmetrizer_short(n)?,
    ));
    let a = antisymmetrizer(n)?;
    report.push(residual_check(
        "A_n fusion = long product",
        p.clone(),
        &a,
        &antisymmetrizer_long(n)?,
    ));
    report.push(residual_check(
        "A_n fusion = (1/n!) prod (1 - s_ij/(j-i))",
        p,
        &a,
        &antisymmetrizer_short(n)?,
    ));
    Ok(report)
}

fn om_rat(q: &BigRational) -> OmegaRatFunc {
    OmegaRatFunc::constant(q.clone())
}

/// `ρ12(u)ρ13(u+v)ρ23(v) = ρ23(v)ρ13(u+v)ρ12(u)` in B_3 at `count` seeded points.
pub fn verify_ybe_points(seed: u64, count: usize) -> Result<Report> {
    let mut report = Report::new("ybe", Some(seed));
    let mut rng = RationalSampler::new(seed);
    let zero = BigRational::from_integer(0.into());
    for _ in 0..count {
        let u = rng.next_where(|q| *q != zero);
        let v = rng.next_where(|q| *q != zero && (q + &u) != zero);
        let (uu, vv, uv) = (om_rat(&u), om_rat(&v), om_rat(&(&u + &v)));
        let lhs = &(&rho_at(1, 2, 3, &uu)? * &rho_at(1, 3, 3, &uv)?) * &rho_at(2, 3, 3, &vv)?;
        let rhs = &(&rho_at(2, 3, 3, &vv)? * &rho_at(1, 3, 3, &uv)?) * &rho_at(1, 2, 3, &uu)?;
        report.push(residual_check(
            "YBE rho12(u) rho13(u+v) rho23(v)",
            json!({ "u": u.to_string(), "v": v.to_string() }),
            &lhs,
            &rhs,
        ));
    }
    Ok(report)
}

/// Unitarity `ρ_ij(u)ρ_ij(−u) = (u²−1)/u²` for all pairs in B_3 as an
/// identity of rational functions in `u`, and the YBE with `u` symbolic and
/// `v` at a few seeded values.
pub fn verify_rho_symbolic(seed: u64) -> Result<Report> {
    let mut report = Report::new("rho-symbolic", Some(seed));
    let n = 3;
    let plus = Shift::new(1, OmegaRatFunc::zero());
    let minus = Shift::new(-1, OmegaRatFunc::zero());
    let u = UniPoly::var();
    let u2 = u.mul(&u);
    let expected = AlgValuedRatFunc::new(
        n,
        UniPoly::constant(BrauerElement::identity(n)).mul_scalar_poly(&u2.sub(&UniPoly::one())),
        u2,
    )?;
    for (i, j) in [(1, 2), (1, 3), (2, 3)] {
        let prod = rho(i, j, n, &plus)?.mul(&rho(i, j, n, &minus)?)?;
        report.push(CheckResult::flag(
            "rho_ij(u) rho_ij(-u) = (u^2-1)/u^2",
            json!({ "i": i, "j": j }),
            prod.same_function(&expected),
        ));
    }
    let mut rng = RationalSampler::new(seed);
    let zero = BigRational::from_integer(0.into());
    for _ in 0..3 {
        let v = rng.next_where(|q| *q != zero);
        let vv = om_rat(&v);
        let r12 = rho(1, 2, n, &plus)?;
        let r13 = rho(1, 3, n, &Shift::new(1, vv.clone()))?;
        let r23 = AlgValuedRatFunc::constant(rho_at(2, 3, n, &vv)?);
        let lhs = r12.mul(&r13)?.mul(&r23)?;
        let rhs = r23.mul(&r13)?.mul(&r12)?;
        report.push(CheckResult::flag(
            "YBE symbolic in u",
            json!({ "v": v.to_string() }),
            lhs.same_function(&rhs),
        ));
    }
    Ok(report)
}

/// Lexicographic products against the chain form, at seeded generic points,
/// for the Brauer function Ω and for the group-algebra function Ω_ω.
pub fn verify_lex_vs_chain(n: usize, seed: u64, points: usize) -> Result<Report> {
    let mut report = Report::new("lex-vs-chain", Some(seed));
    let mut rng = RationalSampler::new(seed);
    let k = kappa();
    let half = OmegaRatFunc::linear(crate::scalars::rat(1, 2), crate::scalars::int(0));
    for _ in 0..points {
        let mut us: Vec<BigRational> = Vec::new();
        while us.len() < n {
            let q = rng.next_rational();
            if us
                .iter()
                .all(|p| *p != q && p + &q != BigRational::from_integer(0.into()))
            {
                us.push(q);
            }
        }
        let u: Vec<OmegaRatFunc> = us.iter().map(om_rat).collect();
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        let left = |i: usize, j: usize| &(&k - &u[i - 1]) - &u[j - 1];
        let right = |i: usize, j: usize| &u[i - 1] - &u[j - 1];

        let mut lex = BrauerElement::identity(n);
        for &(i, j) in &pairs {
            lex = &lex * &rho_at(i, j, n, &left(i, j))?;
        }
        for &(i, j) in &pairs {
            lex = &lex * &rho_at(i, j, n, &right(i, j))?;
        }
        let mut chain = BrauerElement::identity(n);
        for r in 2..=n {
            for i in (1..r).rev() {
                chain = &chain * &rho_at(i, r, n, &left(i, r))?;
            }
            for i in 1..r {
                chain = &chain * &rho_at(i, r, n, &right(i, r))?;
            }
        }
        let params = json!({ "n": n, "u": us.iter().map(|q| q.to_string()).collect::<Vec<_>>() });
        report.push(residual_check(
            "Omega lex = chain",
            params.clone(),
            &lex,
            &chain,
        ));

        // Ω_ω: factors (1 + s/(v_i+v_j+ω/2)) and (1 − s/(v_i−v_j)).
        let sym_factor =
            |i: usize, j: usize, denom: OmegaRatFunc, sign: i64| -> Result<BrauerElement> {
                let mut f = BrauerElement::identity(n);
                f.add_term(s_ij(i, j, n)?, &(&OmegaRatFunc::from_int(sign) / &denom));
                Ok(f)
            };
        let mut lex = BrauerElement::identity(n);
        for &(i, j) in &pairs {
            lex = &lex * &sym_factor(i, j, &(&u[i - 1] + &u[j - 1]) + &half, 1)?;
        }
        for &(i, j) in &pairs {
            lex = &lex * &sym_factor(i, j, right(i, j), -1)?;
        }
        let mut chain = BrauerElement::identity(n);
        for r in 2..=n {
            for i in (1..r).rev() {
                chain = &chain * &sym_factor(i, r, &(&u[i - 1] + &u[r - 1]) + &half, 1)?;
            }
            for i in 1..r {
                chain = &chain * &sym_factor(i, r, right(i, r), -1)?;
            }
        }
        report.push(residual_check(
            "Omega_omega lex = chain",
            params,
            &lex,
            &chain,
        ));
    }
    Ok(report)
}

/// Evaluated constant against `h(T)` with the `3ω` removal prefactor.
/// Each check also records whether the `6ω` variant agrees.
pub fn verify_exponent_constants(n: usize) -> Result<Report> {
    use crate::tableau::{h_constant, RemovalPrefactor};
    let mut report = Report::new("exponent-constants", None);
    for t in enumerate_updown(n, None) {
        let (_, h) = fusion_with_exponents_using(&t, Evaluation::Series)?;
        let six = h_constant(&t, RemovalPrefactor::SixOmega)?;
        let three = h_constant(&t, RemovalPrefactor::ThreeOmega)?;
        let p = json!({
            "tableau": t.to_string(),
            "h": h.to_display_string(),
            "six_omega_matches": six == h,
        });
        report.push(CheckResult::new(
            "h(T) = evaluated constant",
            p,
            ratfunc_residual(&(&h - &three)),
        ));
    }
    Ok(report)
}
