//! Exact identity checks on tensor representations.

use num_traits::{One, Zero};
use serde_json::json;

use super::action::BrauerAction;
use super::dims::{gl_dimension, o_dimension, sp_dimension};
use super::matrix::ExactMatrix;
use super::metric::{Metric, MetricKind};
use super::operators::{
    build_f, build_p, build_p_transposed, build_q, build_r, evaluation_image, evaluation_image_s,
    f_image, f_operator, r_inverse, x0, x0_gl, yang_r, yang_r_inverse, TensorOperator,
};
use crate::brauer::{
    diagram_mul, enumerate_diagrams, presentation_relations, project_symmetric_group, BrauerElement,
};
use crate::error::{Error, Result};
use crate::fusion::murphy_element;
use crate::report::{CheckResult, Report};
use crate::sampling::RationalSampler;
use crate::scalars::{int, rat, BigRational};
use crate::tableau::{box_content, enumerate_updown, Partition, UpdownTableau};

const MAX_DRAWS: usize = 1000;

/// Draws `arity` rationals until `f` succeeds; poles and singular solves trigger a redraw.
fn resample<T>(
    s: &mut RationalSampler,
    arity: usize,
    mut f: impl FnMut(&[BigRational]) -> Result<T>,
) -> Result<(Vec<BigRational>, T)> {
    for _ in 0..MAX_DRAWS {
        let pts: Vec<BigRational> = (0..arity).map(|_| s.next_rational()).collect();
        match f(&pts) {
            Ok(t) => return Ok((pts, t)),
            Err(Error::Pole(_)) | Err(Error::Singular) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Inconsistent("no regular sample point found".into()))
}

/// Where a check is evaluated: seeded random points (poles are redrawn) or
/// explicit points (a pole is an error).
#[derive(Clone, Debug)]
pub enum Samples {
    Seeded { seed: u64, count: usize },
    At(Vec<BigRational>),
}

impl Samples {
    fn seed(&self) -> Option<u64> {
        match self {
            Samples::Seeded { seed, .. } => Some(*seed),
            Samples::At(_) => None,
        }
    }

    fn run<T>(
        &self,
        arity: usize,
        mut f: impl FnMut(&[BigRational]) -> Result<T>,
    ) -> Result<Vec<(Vec<BigRational>, T)>> {
        match self {
            Samples::Seeded { seed, count } => {
                let mut s = RationalSampler::new(*seed);
                (0..*count)
                    .map(|_| resample(&mut s, arity, &mut f))
                    .collect()
            }
            Samples::At(pts) => pts.chunks(arity).map(|p| Ok((p.to_vec(), f(p)?))).collect(),
        }
    }
}

fn forbid(x: &BigRational, bad: &[BigRational]) -> Result<()> {
    if bad.contains(x) {
        Err(Error::Pole(show(x)))
    } else {
        Ok(())
    }
}

fn show(q: &BigRational) -> String {
    q.to_string()
}

fn fmt_points(p: &[BigRational]) -> Vec<String> {
    p.iter().map(show).collect()
}

fn base_params(metric: &Metric) -> serde_json::Value {
    json!({"N": metric.n(), "kind": metric.kind().name()})
}

fn with(mut base: serde_json::Value, extra: serde_json::Value) -> serde_json::Value {
    if let (Some(b), Some(e)) = (base.as_object_mut(), extra.as_object()) {
        for (k, v) in e {
            b.insert(k.clone(), v.clone());
        }
    }
    base
}

fn compare(
    name: &str,
    params: serde_json::Value,
    a: &TensorOperator,
    b: &TensorOperator,
) -> Result<CheckResult> {
    Ok(CheckResult::new(name, params, a.residual(b)?))
}

/// `c` with `a = c · b`, when one exists.
pub fn scalar_ratio(a: &ExactMatrix, b: &ExactMatrix) -> Option<BigRational> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return None;
    }
    let Some((i, j, v)) = b.entries().next() else {
        return a.is_zero().then(BigRational::zero);
    };
    let c = a.get(i, j) / v;
    (b.scale(&c) == *a).then_some(c)
}

/// `P² = 1`, `PQ = QP = ±Q`, `Q² = NQ` and `G₁PᵗG₁⁻¹ = G₂PᵗG₂⁻¹`.
pub fn check_pq_relations(metric: &Metric) -> Result<Report> {
    let n = metric.n();
    let mut r = Report::new("pq-relations", None);
    let (p, q) = (build_p(n), build_q(metric));
    let pm = base_params(metric);
    let sq = q.scale(&int(metric.sign()));
    r.push(compare(
        "P^2 = 1",
        pm.clone(),
        &p.mul(&p)?,
        &TensorOperator::identity(n, 2),
    )?);
    r.push(compare("PQ = ±Q", pm.clone(), &p.mul(&q)?, &sq)?);
    r.push(compare("QP = ±Q", pm.clone(), &q.mul(&p)?, &sq)?);
    r.push(compare(
        "Q^2 = NQ",
        pm.clone(),
        &q.mul(&q)?,
        &q.scale(&int(n as i64)),
    )?);
    let pt = build_p_transposed(n);
    let g2 = TensorOperator::new(n, 1, metric.g().clone())?.on(&[1], 2)?;
    let g2i = TensorOperator::new(n, 1, metric.g_inv().clone())?.on(&[1], 2)?;
    r.push(compare(
        "Q = G2 P^t G2^-1",
        pm,
        &q,
        &g2.mul(&pt)?.mul(&g2i)?,
    )?);
    Ok(r)
}

/// Three-site layout `(aux₁, aux₂, vector)`: `P, Q` on the auxiliary pair,
/// `F₁` on `(aux₁, vector)` and `F₂` on `(aux₂, vector)`.
struct Triple {
    p: TensorOperator,
    q: TensorOperator,
    f1: TensorOperator,
    f2: TensorOperator,
    one: TensorOperator,
}

impl Triple {
    fn new(metric: &Metric) -> Result<Self> {
        let n = metric.n();
        let f = f_operator(metric);
        Ok(Self {
            p: build_p(n).on(&[0, 1], 3)?,
            q: build_q(metric).on(&[0, 1], 3)?,
            f1: f.on(&[0, 2], 3)?,
            f2: f.on(&[1, 2], 3)?,
            one: TensorOperator::identity(n, 3),
        })
    }

    fn r(&self, metric: &Metric, u: &BigRational) -> Result<TensorOperator> {
        build_r(metric, u)?.on(&[0, 1], 3)
    }

    /// `U = Q(F₁ + κ)F₂ − F₂(F₁ + κ)Q`.
    fn u_op(&self, kappa: &BigRational) -> Result<TensorOperator> {
        let f1k = self.f1.shift(kappa);
        self.q
            .mul(&f1k)?
            .mul(&self.f2)?
            .sub(&self.f2.mul(&f1k)?.mul(&self.q)?)
    }
}

/// `F + F′ = 0`, `Q(F₁+F₂) = (F₁+F₂)Q = 0` and `[F₁,F₂] = F₁(P−Q) − (P−Q)F₁`.
pub fn check_f_relations(metric: &Metric) -> Result<Report> {
    let n = metric.n();
    let mut r = Report::new("f-relations", None);
    let pm = base_params(metric);
    // (F′)_ij = Σ_kl g_ik F_lk ḡ_lj
    let fs = build_f(metric);
    let mut worst = num_bigint::BigInt::zero();
    for i in 0..n {
        for j in 0..n {
            let mut acc = fs[i * n + j].clone();
            for (k, gik) in metric.g().row(i) {
                for l in 0..n {
                    let glj = metric.g_inv().get(l, j);
                    if !glj.is_zero() {
                        acc = acc.add(&fs[l * n + k].scale(&(&gik * &glj)))?;
                    }
                }
            }
            worst = worst.max(acc.residual(&ExactMatrix::zeros(n, n))?);
        }
    }
    r.push(CheckResult::new("F + F' = 0", pm.clone(), worst));
    let f = f_operator(metric);
    r.push(compare(
        "F' = -F (operator form)",
        pm.clone(),
        &f.g_transpose(metric, 0)?,
        &f.scale(&int(-1)),
    )?);
    let t = Triple::new(metric)?;
    let fsum = t.f1.add(&t.f2)?;
    let zero = t.one.scale(&int(0));
    r.push(compare(
        "Q(F1+F2) = 0",
        pm.clone(),
        &t.q.mul(&fsum)?,
        &zero,
    )?);
    r.push(compare(
        "(F1+F2)Q = 0",
        pm.clone(),
        &fsum.mul(&t.q)?,
        &zero,
    )?);
    let pq = t.p.sub(&t.q)?;
    let lhs = t.f1.mul(&t.f2)?.sub(&t.f2.mul(&t.f1)?)?;
    let rhs = t.f1.mul(&pq)?.sub(&pq.mul(&t.f1)?)?;
    r.push(compare(
        "F1F2 - F2F1 = F1(P-Q) - (P-Q)F1",
        pm.clone(),
        &lhs,
        &rhs,
    )?);
    r.push(compare("QF1Q = 0", pm, &t.q.mul(&t.f1)?.mul(&t.q)?, &zero)?);
    Ok(r)
}

/// The `R𝔉𝔉` exchange identity at seeded `(u, v)` and the relations
/// `PU = UP = ±U`, `QU + UQ = NU`, `(F₁+F₂)U = UQ`.
pub fn check_lemma_identities(metric: &Metric, seed: u64, points: usize) -> Result<Report> {
    let n = metric.n();
    let kappa = metric.kappa();
    let mut r = Report::new("lemma-identities", Some(seed));
    let pm = base_params(metric);
    let t = Triple::new(metric)?;
    let u_op = t.u_op(&kappa)?;
    let su = u_op.scale(&int(metric.sign()));
    r.push(compare("PU = ±U", pm.clone(), &t.p.mul(&u_op)?, &su)?);
    r.push(compare("UP = ±U", pm.clone(), &u_op.mul(&t.p)?, &su)?);
    r.push(compare(
        "QU + UQ = NU",
        pm.clone(),
        &t.q.mul(&u_op)?.add(&u_op.mul(&t.q)?)?,
        &u_op.scale(&int(n as i64)),
    )?);
    r.push(compare(
        "(F1+F2)U = UQ",
        pm.clone(),
        &t.f1.add(&t.f2)?.mul(&u_op)?,
        &u_op.mul(&t.q)?,
    )?);
    let mut s = RationalSampler::new(seed);
    for _ in 0..points {
        let (pt, (lhs, rhs)) = resample(&mut s, 2, |p| {
            let w = &p[0] - &p[1];
            forbid(&(&w - &kappa), &[BigRational::zero()])?;
            let rm = t.r(metric, &w)?;
            let fu = t.f1.shift(&p[0]);
            let fv = t.f2.shift(&p[1]);
            let lhs = rm.mul(&fu)?.mul(&fv)?.sub(&fv.mul(&fu)?.mul(&rm)?)?;
            let rhs = u_op.scale(&(BigRational::one() / (&w - &kappa)));
            Ok((lhs, rhs))
        })?;
        r.push(compare(
            "R(u-v)F1(u)F2(v) - F2(v)F1(u)R(u-v) = U/(u-v-kappa)",
            with(
                pm.clone(),
                json!({"u": fmt_points(&pt)[0], "v": fmt_points(&pt)[1]}),
            ),
            &lhs,
            &rhs,
        )?);
    }
    Ok(r)
}

/// Unitarity `R(u)R(−u) = (1 − u⁻²)·1` and the Yang–Baxter equation at seeded points.
pub fn check_r_matrix(metric: &Metric, seed: u64, points: usize) -> Result<Report> {
    let n = metric.n();
    let mut r = Report::new("r-matrix", Some(seed));
    let pm = base_params(metric);
    let mut s = RationalSampler::new(seed);
    for _ in 0..points {
        let (pt, (lhs, rhs)) = resample(&mut s, 1, |p| {
            let u = &p[0];
            let lhs = build_r(metric, u)?.mul(&build_r(metric, &-u)?)?;
            let c = BigRational::one() - BigRational::one() / (u * u);
            Ok((lhs, TensorOperator::identity(n, 2).scale(&c)))
        })?;
        r.push(compare(
            "R(u)R(-u) = (1 - 1/u^2)",
            with(pm.clone(), json!({"u": show(&pt[0])})),
            &lhs,
            &rhs,
        )?);
    }
    for _ in 0..points {
        let (pt, (lhs, rhs)) = resample(&mut s, 2, |p| ybe_sides(metric, &p[0], &p[1]))?;
        r.push(compare(
            "YBE R12(u)R13(u+v)R23(v)",
            with(pm.clone(), json!({"u": show(&pt[0]), "v": show(&pt[1])})),
            &lhs,
            &rhs,
        )?);
    }
    Ok(r)
}

fn ybe_sides(
    metric: &Metric,
    u: &BigRational,
    v: &BigRational,
) -> Result<(TensorOperator, TensorOperator)> {
    let r12 = build_r(metric, u)?.on(&[0, 1], 3)?;
    let r13 = build_r(metric, &(u + v))?.on(&[0, 2], 3)?;
    let r23 = build_r(metric, v)?.on(&[1, 2], 3)?;
    Ok((r12.mul(&r13)?.mul(&r23)?, r23.mul(&r13)?.mul(&r12)?))
}

/// Everything a single metric must satisfy: the P/Q and F relations, both
/// lemmas, R-unitarity and YBE.
pub fn verify_matrix_identities(metric: &Metric, seed: u64, points: usize) -> Result<Report> {
    let mut r = Report::new("matrix-identities", Some(seed));
    r.extend(check_pq_relations(metric)?);
    r.extend(check_f_relations(metric)?);
    r.extend(check_lemma_identities(metric, seed, points)?);
    r.extend(check_r_matrix(metric, seed.wrapping_add(1), points)?);
    Ok(r)
}

/// Unitarity `S(u)S(−u) = 1` and the reflection equation for the evaluation
/// image on `m` vector sites, at seeded `(u, v)`.
pub fn check_reflection(metric: &Metric, m: usize, seed: u64, points: usize) -> Result<Report> {
    let n = metric.n();
    let kappa = metric.kappa();
    let mut r = Report::new("reflection", Some(seed));
    let pm = with(base_params(metric), json!({"sites": m}));
    let f = f_image(metric, m)?;
    let total = 2 + m;
    let reps: Vec<usize> = (2..total).collect();
    let on =
        |aux: usize| -> Vec<usize> { std::iter::once(aux).chain(reps.iter().copied()).collect() };
    let mut s = RationalSampler::new(seed);
    for _ in 0..points {
        let (pt, checks) = resample(&mut s, 2, |p| {
            let (u, v) = (&p[0], &p[1]);
            forbid(&(u - v), &[BigRational::zero(), kappa.clone()])?;
            forbid(&(u + v), &[BigRational::zero(), kappa.clone()])?;
            let su = evaluation_image(&f, n, u)?;
            let sv = evaluation_image(&f, n, v)?;
            let smu = evaluation_image(&f, n, &-u)?;
            let unit = (su.mul(&smu)?, TensorOperator::identity(n, 1 + m));
            let rm = build_r(metric, &(u - v))?.on(&[0, 1], total)?;
            let rp = build_r(metric, &(u + v))?.on(&[0, 1], total)?;
            let s1 = su.on(&on(0), total)?;
            let s2 = sv.on(&on(1), total)?;
            let lhs = rm.mul(&s1.mul(&rp.mul(&s2)?)?)?;
            let rhs = s2.mul(&rp.mul(&s1.mul(&rm)?)?)?;
            Ok((unit, (lhs, rhs)))
        })?;
        let params = with(pm.clone(), json!({"u": show(&pt[0]), "v": show(&pt[1])}));
        r.push(compare(
            "S(u)S(-u) = 1",
            params.clone(),
            &checks.0 .0,
            &checks.0 .1,
        )?);
        r.push(compare(
            "reflection equation",
            params,
            &checks.1 .0,
            &checks.1 .1,
        )?);
    }
    Ok(r)
}

/// The `u⁻¹` coefficient `s⁽¹⁾ = 2F − N/2` of the evaluation image and the
/// round trip `¼(S − S′) = F`.
pub fn check_embedding(metric: &Metric, m: usize, seed: u64) -> Result<Report> {
    let n = metric.n();
    let a = rat(n as i64, 4);
    let mut r = Report::new("embedding", Some(seed));
    let pm = with(base_params(metric), json!({"sites": m}));
    let f = f_image(metric, m)?;
    let s1 = f.scale(&int(2)).shift(&(-&a * int(2)));
    // (u − F + N/4)(S(u) − 1) = s⁽¹⁾ characterizes s⁽¹⁾ as the u⁻¹ coefficient
    let mut s = RationalSampler::new(seed);
    let (pt, lhs) = resample(&mut s, 1, |p| {
        let su = evaluation_image_s(metric, m, &p[0])?;
        let resolvent = f.scale(&int(-1)).shift(&(&p[0] + &a));
        resolvent.mul(&su.shift(&int(-1)))
    })?;
    r.push(compare(
        "(u - F + N/4)(S(u) - 1) = 2F - N/2",
        with(pm.clone(), json!({"u": show(&pt[0])})),
        &lhs,
        &s1,
    )?);
    let s1p = s1.g_transpose(metric, 0)?;
    let back = s1.sub(&s1p)?.scale(&rat(1, 4));
    r.push(compare("(S - S')/4 = F", pm.clone(), &back, &f)?);
    r.push(compare(
        "S' = -2F - N/2",
        pm,
        &s1p,
        &f.scale(&int(-2)).shift(&(-&a * int(2))),
    )?);
    Ok(r)
}

/// `T(u) ↦ R₀₁(u − z₁)⋯R₀ₙ(u − zₙ)`: RTT at seeded `(u, v)`, and the reflection
/// equation plus unitarity for `S(u) = T(−u)⁻¹T(u)`.
pub fn yangian_rep_check(
    metric: &Metric,
    z: &[BigRational],
    seed: u64,
    points: usize,
) -> Result<Report> {
    let n = metric.n();
    let sites = z.len();
    let mut r = Report::new("yangian", Some(seed));
    let pm = with(base_params(metric), json!({"z": fmt_points(z)}));
    // T(u) on (aux, vector sites) placed in a space with `aux_count` auxiliary slots
    let t_of = |u: &BigRational, aux: usize, aux_count: usize| -> Result<TensorOperator> {
        let total = aux_count + sites;
        let mut acc = TensorOperator::identity(n, total);
        for (i, zi) in z.iter().enumerate() {
            acc = acc.mul(&build_r(metric, &(u - zi))?.on(&[aux, aux_count + i], total)?)?;
        }
        Ok(acc)
    };
    let t_inv_of = |u: &BigRational, aux: usize, aux_count: usize| -> Result<TensorOperator> {
        let total = aux_count + sites;
        let mut acc = TensorOperator::identity(n, total);
        for (i, zi) in z.iter().enumerate().rev() {
            acc = acc.mul(&r_inverse(metric, &(u - zi))?.on(&[aux, aux_count + i], total)?)?;
        }
        Ok(acc)
    };
    let s_of = |u: &BigRational, aux: usize, aux_count: usize| -> Result<TensorOperator> {
        t_inv_of(&-u, aux, aux_count)?.mul(&t_of(u, aux, aux_count)?)
    };
    let total = 2 + sites;
    let mut s = RationalSampler::new(seed);
    for _ in 0..points {
        let (pt, (rtt, refl, unit)) = resample(&mut s, 2, |p| {
            let (u, v) = (&p[0], &p[1]);
            let rm = build_r(metric, &(u - v))?.on(&[0, 1], total)?;
            let rp = build_r(metric, &(u + v))?.on(&[0, 1], total)?;
            let (t1, t2) = (t_of(u, 0, 2)?, t_of(v, 1, 2)?);
            let rtt = (rm.mul(&t1)?.mul(&t2)?, t2.mul(&t1)?.mul(&rm)?);
            let (s1, s2) = (s_of(u, 0, 2)?, s_of(v, 1, 2)?);
            let refl = (
                rm.mul(&s1)?.mul(&rp)?.mul(&s2)?,
                s2.mul(&rp)?.mul(&s1)?.mul(&rm)?,
            );
            let unit = s_of(u, 0, 1)?.mul(&s_of(&-u, 0, 1)?)?;
            Ok((rtt, refl, unit))
        })?;
        let params = with(pm.clone(), json!({"u": show(&pt[0]), "v": show(&pt[1])}));
        r.push(compare("RTT", params.clone(), &rtt.0, &rtt.1)?);
        r.push(compare(
            "reflection equation for T(-u)^-1 T(u)",
            params.clone(),
            &refl.0,
            &refl.1,
        )?);
        r.push(compare(
            "S(u)S(-u) = 1 for T(-u)^-1 T(u)",
            params,
            &unit,
            &TensorOperator::identity(n, 1 + sites),
        )?);
    }
    Ok(r)
}

/// The action is a homomorphism: every diagram has an image, products of
/// diagram images follow `d₁d₂ = ω^loops · d`, and the defining relations hold.
pub fn check_brauer_action(metric: &Metric, n: usize) -> Result<Report> {
    let mut r = Report::new("brauer-action", None);
    let pm = with(base_params(metric), json!({"n": n}));
    let action = BrauerAction::new(metric, n)?;
    let diagrams = enumerate_diagrams(n);
    r.push(CheckResult::flag(
        "every diagram has an image",
        pm.clone(),
        action.len() == diagrams.len(),
    ));
    let omega = metric.omega();
    let mut worst = num_bigint::BigInt::zero();
    for d1 in &diagrams {
        let a = action.diagram(d1)?;
        for d2 in &diagrams {
            let (loops, d) = diagram_mul(d1, d2)?;
            let lhs = a.mul(&action.diagram(d2)?)?;
            let mut rhs = action.diagram(&d)?;
            for _ in 0..loops {
                rhs = rhs.scale(&omega);
            }
            worst = worst.max(lhs.residual(&rhs)?);
        }
    }
    r.push(CheckResult::new(
        "image(d1)image(d2) = omega^loops image(d1 d2)",
        pm.clone(),
        worst,
    ));
    if n >= 2 {
        for (name, cases) in presentation_relations(n)? {
            let mut worst = num_bigint::BigInt::zero();
            for (l, rr) in &cases {
                worst = worst.max(action.element(l)?.residual(&action.element(rr)?)?);
            }
            r.push(CheckResult::new(
                name,
                with(pm.clone(), json!({"instances": cases.len()})),
                worst,
            ));
        }
    }
    Ok(r)
}

/// Images of all `E_T` of length `n` are orthogonal idempotents summing to 1.
pub fn check_projector_transport(metric: &Metric, n: usize) -> Result<Report> {
    let mut r = Report::new("projector-transport", None);
    let pm = with(base_params(metric), json!({"n": n}));
    let action = BrauerAction::new(metric, n)?;
    let tabs = enumerate_updown(n, None);
    let images: Vec<TensorOperator> = tabs
        .iter()
        .map(|t| action.element(&murphy_element(t)?))
        .collect::<Result<_>>()?;
    let dim = metric.n().pow(n as u32);
    let zero = TensorOperator::identity(metric.n(), n).scale(&int(0));
    let mut sum = zero.clone();
    for (t, e) in tabs.iter().zip(&images) {
        r.push(compare(
            "E_T^2 = E_T",
            with(pm.clone(), json!({"tableau": t.to_string()})),
            &e.mul(e)?,
            e,
        )?);
        sum = sum.add(e)?;
    }
    let mut worst = num_bigint::BigInt::zero();
    for (i, a) in images.iter().enumerate() {
        for (j, b) in images.iter().enumerate() {
            if i != j {
                worst = worst.max(a.mul(b)?.residual(&zero)?);
            }
        }
    }
    r.push(CheckResult::new(
        "E_T E_T' = 0 for T != T'",
        pm.clone(),
        worst,
    ));
    r.push(compare(
        "sum of E_T = 1",
        pm.clone(),
        &sum,
        &TensorOperator::identity(metric.n(), n),
    )?);
    let tr = sum.trace();
    r.push(CheckResult::new(
        "trace of sum = N^n",
        with(pm, json!({"trace": show(&tr)})),
        (tr - int(dim as i64)).numer().clone(),
    ));
    Ok(r)
}

/// Expected dimension of `L_U = E_U (C^N)^{⊗n}`: `L(λ)` for O_N, and `L(λ′)`
/// for Sp_N because `s ↦ −P` swaps rows and columns.
pub fn expected_rank(metric: &Metric, shape: &Partition) -> BigRational {
    match metric.kind() {
        MetricKind::Symplectic => sp_dimension(metric.n(), &conjugate(shape)),
        _ => o_dimension(metric.n(), shape),
    }
}

fn conjugate(p: &Partition) -> Partition {
    let first = p.parts().first().copied().unwrap_or(0);
    Partition::new((1..=first).map(|j| p.column_length(j)).collect())
        .expect("conjugate is a partition")
}

/// A spanning set of `C^N ⊗ im E` with `E` a verified idempotent, plus its rank.
struct Subspace {
    e0: TensorOperator,
    w: TensorOperator,
    /// `W` as a plain matrix with `N · rank` columns.
    w_cols: ExactMatrix,
    rank: usize,
}

fn subspace(
    e: &TensorOperator,
    report: &mut Report,
    params: &serde_json::Value,
) -> Result<Subspace> {
    let dim = e.n();
    let n = e.sites();
    report.push(compare("E^2 = E", params.clone(), &e.mul(e)?, e)?);
    let tr = e.trace();
    if !tr.is_integer() {
        return Err(Error::Inconsistent(format!(
            "projector trace {tr} is not an integer"
        )));
    }
    let rank = tr
        .to_integer()
        .try_into()
        .map_err(|_| Error::Inconsistent("negative trace".into()))?;
    let cols = e.matrix().independent_columns_mod_p();
    report.push(CheckResult::flag(
        "columns span the image",
        with(
            params.clone(),
            json!({"rank": rank, "independent": cols.len()}),
        ),
        cols.len() == rank,
    ));
    let b = e.matrix().select_columns(&cols);
    let w_cols = ExactMatrix::identity(dim).kron(&b);
    let sites: Vec<usize> = (1..=n).collect();
    Ok(Subspace {
        e0: e.on(&sites, n + 1)?,
        w: TensorOperator::new(
            dim,
            n + 1,
            ExactMatrix::zeros(dim.pow(n as u32 + 1), dim.pow(n as u32 + 1)),
        )?,
        w_cols,
        rank,
    })
    .map(|mut s| {
        s.w = s.e0.clone();
        s
    })
}

fn apply(op: &TensorOperator, w: &ExactMatrix) -> Result<ExactMatrix> {
    op.matrix().mul(w)
}

/// `Π (X − θ)` applied to `w`.
fn annihilates(x: &TensorOperator, roots: &[BigRational], w: &ExactMatrix) -> Result<bool> {
    let mut v = w.clone();
    for th in roots {
        v = x.shift(&-th).matrix().mul(&v)?;
    }
    Ok(v.is_zero())
}

/// The identity behind the invariance of `L_U` under the reflection algebra:
///
/// `R₀ₙ(−u∓cₙ+κ/2)⁻¹⋯R₀₁(−u∓c₁+κ/2)⁻¹ R₀₁(u∓c₁+κ/2)⋯R₀ₙ(u∓cₙ+κ/2) E_U
///   = (u+N/4)/(u−N/4) · E_U (u+X₀−N/4)(u−X₀+N/4)⁻¹`.
///
/// Both sides vanish on `ker E_U` once `X₀` commutes with `E_U`, so the
/// identity is checked on a spanning set `W` of `C^N ⊗ L_U`; multiplying by
/// `u − X₀ + N/4` (invertible there, as the annihilating polynomial of `X₀`
/// on `W` shows) removes the inverse.
pub fn check_prop_invco(
    u_tab: &UpdownTableau,
    metric: &Metric,
    seed: u64,
    points: usize,
) -> Result<Report> {
    prop_invco(
        u_tab,
        metric,
        &Samples::Seeded {
            seed,
            count: points,
        },
    )
}

/// [`check_prop_invco`] at the given values of `u`.
pub fn check_prop_invco_at(
    u_tab: &UpdownTableau,
    metric: &Metric,
    points: &[BigRational],
) -> Result<Report> {
    prop_invco(u_tab, metric, &Samples::At(points.to_vec()))
}

fn prop_invco(u_tab: &UpdownTableau, metric: &Metric, samples: &Samples) -> Result<Report> {
    let n = u_tab.n();
    let dim = metric.n();
    let sign = metric.sign();
    let omega = metric.omega();
    let kappa = metric.kappa();
    let a = rat(dim as i64, 4);
    let mut report = Report::new("invco", samples.seed());
    let pm = with(
        base_params(metric),
        json!({"tableau": u_tab.to_string(), "n": n}),
    );
    let action = BrauerAction::new(metric, n)?;
    let e = action.element(&murphy_element(u_tab)?)?;
    let sub = subspace(&e, &mut report, &pm)?;
    let expected = expected_rank(metric, u_tab.shape());
    report.push(CheckResult::flag(
        "rank E_U = dim L(shape)",
        with(
            pm.clone(),
            json!({"rank": sub.rank, "expected": show(&expected)}),
        ),
        int(sub.rank as i64) == expected,
    ));
    let x = x0(metric, n)?;
    report.push(compare(
        "X0 E_U = E_U X0",
        pm.clone(),
        &x.mul(&sub.e0)?,
        &sub.e0.mul(&x)?,
    )?);
    // X₀ = (N ∓ 1)/2 ∓ x₀ with x₀ the Jucys–Murphy element of the extra site
    let half = rat(dim as i64 - sign, 2);
    let mut roots: Vec<BigRational> = Vec::new();
    let shape = u_tab.shape();
    let branch = shape
        .addable()
        .into_iter()
        .map(box_content)
        .chain(shape.removable().into_iter().map(|c| -box_content(c)));
    for c in branch {
        let th = &half - c.evaluate(&omega)? * int(sign);
        if !roots.contains(&th) {
            roots.push(th);
        }
    }
    report.push(CheckResult::flag(
        "X0 annihilated by its predicted eigenvalues on C^N ⊗ L_U",
        with(pm.clone(), json!({"eigenvalues": fmt_points(&roots)})),
        annihilates(&x, &roots, &sub.w_cols)?,
    ));
    let contents: Vec<BigRational> = u_tab
        .contents()
        .iter()
        .map(|c| c.evaluate(&omega))
        .collect::<Result<_>>()?;
    let half_kappa = &kappa / int(2);
    let total = n + 1;
    let evaluated = samples.run(1, |p| {
        let u = &p[0];
        forbid(u, &[a.clone(), -&a])?;
        for th in &roots {
            forbid(&(u + &a - th), &[BigRational::zero()])?;
        }
        let mut v = apply(&x.scale(&int(-1)).shift(&(u + &a)), &sub.w_cols)?;
        for (i, c) in contents.iter().enumerate().rev() {
            let w = u - c * int(sign) + &half_kappa;
            v = build_r(metric, &w)?
                .on(&[0, i + 1], total)?
                .matrix()
                .mul(&v)?;
        }
        for (i, c) in contents.iter().enumerate() {
            let w = -u - c * int(sign) + &half_kappa;
            v = r_inverse(metric, &w)?
                .on(&[0, i + 1], total)?
                .matrix()
                .mul(&v)?;
        }
        let y = apply(&x.shift(&(u - &a)), &sub.w_cols)?;
        let c = (u + &a) / (u - &a);
        let observed = scalar_ratio(&v, &y);
        Ok((v, y.scale(&c), observed))
    })?;
    for (pt, (lhs, rhs, observed)) in evaluated {
        let params = with(
            pm.clone(),
            json!({"u": show(&pt[0]), "observed_scalar": observed.as_ref().map(show)}),
        );
        report.push(CheckResult::new(
            "chain E_U = (u+N/4)/(u-N/4) E_U Y(u)",
            params,
            lhs.residual(&rhs)?,
        ));
    }
    Ok(report)
}

/// The gl_N counterpart with Yang's R-matrix, σ-contents and a rational `ω`:
///
/// `R₀ₙ(−u−σₙ−ω/4)⁻¹⋯R₀₁(−u−σ₁−ω/4)⁻¹ R₀₁(u−σ₁−ω/4)⋯R₀ₙ(u−σₙ−ω/4) E_T
///   = (u+ω/4)/(u−ω/4) · E_T (u−X₀−ω/4)(u+X₀+ω/4)⁻¹`,  `X₀ = Σ P₀ᵢ`,
///
/// whose right side is the evaluation image of the reflection algebra of
/// gl_N on `L_T`. Each check also records whether the reciprocal
/// normalization `(u−ω/4)/(u+ω/4)·chain` reproduces that evaluation image.
pub fn check_prop_invcogl(
    t: &UpdownTableau,
    dim: usize,
    omega: &BigRational,
    seed: u64,
    points: usize,
) -> Result<Report> {
    prop_invcogl(
        t,
        dim,
        omega,
        &Samples::Seeded {
            seed,
            count: points,
        },
    )
}

/// [`check_prop_invcogl`] at the given values of `u`.
pub fn check_prop_invcogl_at(
    t: &UpdownTableau,
    dim: usize,
    omega: &BigRational,
    points: &[BigRational],
) -> Result<Report> {
    prop_invcogl(t, dim, omega, &Samples::At(points.to_vec()))
}

fn prop_invcogl(
    t: &UpdownTableau,
    dim: usize,
    omega: &BigRational,
    samples: &Samples,
) -> Result<Report> {
    if !t.is_standard() {
        return Err(Error::InvalidTableau(format!(
            "{t} is not a standard tableau"
        )));
    }
    let n = t.n();
    let a = omega / int(4);
    let mut report = Report::new("invco-gl", samples.seed());
    let pm = json!({"N": dim, "omega": show(omega), "tableau": t.to_string(), "n": n});
    let sym = project_symmetric_group(&murphy_element(t)?);
    let mut terms = Vec::new();
    for (d, c) in sym.as_element().terms() {
        let v = c.as_constant().ok_or_else(|| {
            Error::Inconsistent(format!(
                "symmetric-group idempotent for {t} depends on omega"
            ))
        })?;
        terms.push((d.clone(), crate::scalars::OmegaRatFunc::constant(v)));
    }
    let e_sym = BrauerElement::from_terms(n, terms)?;
    let action = BrauerAction::new(&Metric::new(dim, MetricKind::OrthogonalIdentity)?, n)?;
    let e = action.element(&e_sym)?;
    let sub = subspace(&e, &mut report, &pm)?;
    let expected = gl_dimension(dim, t.shape());
    report.push(CheckResult::flag(
        "rank E_T = dim L(shape)",
        with(
            pm.clone(),
            json!({"rank": sub.rank, "expected": show(&expected)}),
        ),
        int(sub.rank as i64) == expected,
    ));
    let x = x0_gl(dim, n)?;
    report.push(compare(
        "X0 E_T = E_T X0",
        pm.clone(),
        &x.mul(&sub.e0)?,
        &sub.e0.mul(&x)?,
    )?);
    let roots: Vec<BigRational> = t
        .shape()
        .addable()
        .iter()
        .map(|c| int(c.col as i64 - c.row as i64))
        .collect();
    report.push(CheckResult::flag(
        "X0 annihilated by the addable contents on C^N ⊗ L_T",
        with(pm.clone(), json!({"eigenvalues": fmt_points(&roots)})),
        annihilates(&x, &roots, &sub.w_cols)?,
    ));
    let sigma: Vec<BigRational> = t.classical_contents()?.into_iter().map(int).collect();
    let total = n + 1;
    let evaluated = samples.run(1, |p| {
        let u = &p[0];
        forbid(u, &[a.clone(), -&a])?;
        for th in &roots {
            forbid(&(u + &a + th), &[BigRational::zero()])?;
        }
        let mut v = apply(&x.shift(&(u + &a)), &sub.w_cols)?;
        for (i, c) in sigma.iter().enumerate().rev() {
            v = yang_r(dim, &(u - c - &a))?
                .on(&[0, i + 1], total)?
                .matrix()
                .mul(&v)?;
        }
        for (i, c) in sigma.iter().enumerate() {
            v = yang_r_inverse(dim, &(-u - c - &a))?
                .on(&[0, i + 1], total)?
                .matrix()
                .mul(&v)?;
        }
        let y = apply(&x.scale(&int(-1)).shift(&(u - &a)), &sub.w_cols)?;
        let c = (u + &a) / (u - &a);
        let reciprocal = v.scale(&(BigRational::one() / &c)) == y.scale(&c);
        let observed = scalar_ratio(&v, &y);
        Ok((v, y.scale(&c), reciprocal, observed))
    })?;
    for (pt, (lhs, rhs, reciprocal, observed)) in evaluated {
        let params = with(
            pm.clone(),
            json!({
                "u": show(&pt[0]),
                "observed_scalar": observed.as_ref().map(show),
                "reciprocal_prefactor_matches": reciprocal,
            }),
        );
        report.push(CheckResult::new(
            "chain E_T = (u+w/4)/(u-w/4) E_T Y(u)",
            params,
            lhs.residual(&rhs)?,
        ));
    }
    Ok(report)
}
