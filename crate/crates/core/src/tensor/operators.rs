//! P, Q, F and the R-matrices on tensor powers of C^N.

use num_traits::{One, Zero};

use super::matrix::ExactMatrix;
use super::metric::Metric;
use crate::error::{Error, Result};
use crate::scalars::{format_rational, int, rat, BigRational};

/// An operator on `(C^N)^{⊗sites}`; site 0 is the most significant index digit.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorOperator {
    n: usize,
    sites: usize,
    matrix: ExactMatrix,
}

impl TensorOperator {
    pub fn new(n: usize, sites: usize, matrix: ExactMatrix) -> Result<Self> {
        let dim = n.pow(sites as u32);
        if matrix.rows() != dim || matrix.cols() != dim {
            return Err(Error::SizeMismatch(matrix.rows(), dim));
        }
        Ok(Self { n, sites, matrix })
    }

    pub fn identity(n: usize, sites: usize) -> Self {
        Self {
            n,
            sites,
            matrix: ExactMatrix::identity(n.pow(sites as u32)),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ExactMatrix {
        self.matrix
    }

    /// Places this operator on `positions` of a `total`-site space.
    pub fn on(&self, positions: &[usize], total: usize) -> Result<Self> {
        if positions.len() != self.sites {
            return Err(Error::SizeMismatch(positions.len(), self.sites));
        }
        Ok(Self {
            n: self.n,
            sites: total,
            matrix: self.matrix.embed_sites(self.n, positions, total)?,
        })
    }

    fn same_space(&self, rhs: &Self) -> Result<()> {
        if self.n != rhs.n {
            return Err(Error::SizeMismatch(self.n, rhs.n));
        }
        if self.sites != rhs.sites {
            return Err(Error::SizeMismatch(self.sites, rhs.sites));
        }
        Ok(())
    }

    fn with(&self, matrix: ExactMatrix) -> Self {
        Self {
            n: self.n,
            sites: self.sites,
            matrix,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.same_space(rhs)?;
        Ok(self.with(self.matrix.mul(&rhs.matrix)?))
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.same_space(rhs)?;
        Ok(self.with(self.matrix.add(&rhs.matrix)?))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.same_space(rhs)?;
        Ok(self.with(self.matrix.sub(&rhs.matrix)?))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.with(self.matrix.scale(c))
    }

    /// `self + c · 1`.
    pub fn shift(&self, c: &BigRational) -> Self {
        self.with(self.matrix.add_scalar(c).expect("square"))
    }

    pub fn trace(&self) -> BigRational {
        self.matrix.trace()
    }

    /// `G_s A^{t_s} G_s⁻¹`: the G-transpose in tensor factor `site`.
    pub fn g_transpose(&self, metric: &Metric, site: usize) -> Result<Self> {
        let g = TensorOperator::new(self.n, 1, metric.g().clone())?.on(&[site], self.sites)?;
        let gi = TensorOperator::new(self.n, 1, metric.g_inv().clone())?.on(&[site], self.sites)?;
        let t = self.with(self.matrix.partial_transpose(self.n, site, self.sites)?);
        g.mul(&t)?.mul(&gi)
    }

    /// Largest absolute numerator of `self − rhs`.
    pub fn residual(&self, rhs: &Self) -> Result<num_bigint::BigInt> {
        self.same_space(rhs)?;
        self.matrix.residual(&rhs.matrix)
    }
}

/// `P = Σ e_ij ⊗ e_ji`.
pub fn build_p(n: usize) -> TensorOperator {
    let m = ExactMatrix::from_entries(
        n * n,
        n * n,
        (0..n).flat_map(|i| (0..n).map(move |j| (i * n + j, j * n + i, int(1)))),
    );
    TensorOperator {
        n,
        sites: 2,
        matrix: m,
    }
}

/// `Pᵗ = Σ e_ij ⊗ e_ij`.
pub fn build_p_transposed(n: usize) -> TensorOperator {
    let m = ExactMatrix::from_entries(
        n * n,
        n * n,
        (0..n).flat_map(|i| (0..n).map(move |j| (i * n + i, j * n + j, int(1)))),
    );
    TensorOperator {
        n,
        sites: 2,
        matrix: m,
    }
}

/// `Q = G₁ Pᵗ G₁⁻¹`, entrywise `Q_{(a,b),(c,d)} = g_ab ḡ_dc`.
pub fn build_q(metric: &Metric) -> TensorOperator {
    let n = metric.n();
    let (g, gi) = (metric.g(), metric.g_inv());
    let mut entries = Vec::new();
    for a in 0..n {
        for (b, gab) in g.row(a) {
            for d in 0..n {
                for (c, gdc) in gi.row(d) {
                    entries.push((a * n + b, c * n + d, &gab * &gdc));
                }
            }
        }
    }
    TensorOperator {
        n,
        sites: 2,
        matrix: ExactMatrix::from_entries(n * n, n * n, entries),
    }
}

/// Vector-representation images of `F_ij = E_ij − Σ g_ik ḡ_lj E_lk` under
/// `E_ij ↦ e_ij`; entry `i·N + j` holds `F_ij`.
pub fn build_f(metric: &Metric) -> Vec<ExactMatrix> {
    let n = metric.n();
    let (g, gi) = (metric.g(), metric.g_inv());
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut entries = vec![(i, j, int(1))];
            for (k, gik) in g.row(i) {
                for l in 0..n {
                    let glj = gi.get(l, j);
                    if !glj.is_zero() {
                        entries.push((l, k, -(&gik * &glj)));
                    }
                }
            }
            out.push(ExactMatrix::from_entries(n, n, entries));
        }
    }
    out
}

/// `F = Σ e_ij ⊗ F_ij` on (auxiliary, vector) sites.
pub fn f_operator(metric: &Metric) -> TensorOperator {
    let n = metric.n();
    let fs = build_f(metric);
    let mut entries = Vec::new();
    for a in 0..n {
        for c in 0..n {
            for (b, d, v) in fs[a * n + c].entries() {
                entries.push((a * n + b, c * n + d, v));
            }
        }
    }
    TensorOperator {
        n,
        sites: 2,
        matrix: ExactMatrix::from_entries(n * n, n * n, entries),
    }
}

/// Image of `F` acting on `m` vector sites: `Σ_i F_{0i}` on `1 + m` sites.
pub fn f_image(metric: &Metric, m: usize) -> Result<TensorOperator> {
    let f = f_operator(metric);
    let mut acc = TensorOperator::identity(metric.n(), 1 + m).scale(&int(0));
    for i in 1..=m {
        acc = acc.add(&f.on(&[0, i], 1 + m)?)?;
    }
    Ok(acc)
}

/// `X₀ = Σ_i (Q_{0i} − P_{0i})` on `1 + n` sites: the image of `F` under
/// the realization `E_ij ↦ −e_ji` of each vector site.
pub fn x0(metric: &Metric, n: usize) -> Result<TensorOperator> {
    let d = build_q(metric).sub(&build_p(metric.n()))?;
    let mut acc = TensorOperator::identity(metric.n(), 1 + n).scale(&int(0));
    for i in 1..=n {
        acc = acc.add(&d.on(&[0, i], 1 + n)?)?;
    }
    Ok(acc)
}

/// `Σ_i P_{0i}` on `1 + n` sites.
pub fn x0_gl(dim: usize, n: usize) -> Result<TensorOperator> {
    let p = build_p(dim);
    let mut acc = TensorOperator::identity(dim, 1 + n).scale(&int(0));
    for i in 1..=n {
        acc = acc.add(&p.on(&[0, i], 1 + n)?)?;
    }
    Ok(acc)
}

fn pole(u: &BigRational) -> Error {
    Error::Pole(format_rational(u))
}

/// `R(u) = 1 − P/u + Q/(u − κ)`.
pub fn build_r(metric: &Metric, u: &BigRational) -> Result<TensorOperator> {
    let kappa = metric.kappa();
    if u.is_zero() || *u == kappa {
        return Err(pole(u));
    }
    let n = metric.n();
    let one = TensorOperator::identity(n, 2);
    let p = build_p(n).scale(&(-BigRational::one() / u));
    let q = build_q(metric).scale(&(BigRational::one() / (u - &kappa)));
    one.add(&p)?.add(&q)
}

/// `R(u)⁻¹ = u²/(u² − 1) · R(−u)`.
pub fn r_inverse(metric: &Metric, u: &BigRational) -> Result<TensorOperator> {
    let u2 = u * u;
    if u2 == BigRational::one() {
        return Err(pole(u));
    }
    let r = build_r(metric, &-u)?;
    Ok(r.scale(&(&u2 / (&u2 - BigRational::one()))))
}

/// Yang's `R(u) = 1 − P/u`.
pub fn yang_r(n: usize, u: &BigRational) -> Result<TensorOperator> {
    if u.is_zero() {
        return Err(pole(u));
    }
    TensorOperator::identity(n, 2).add(&build_p(n).scale(&(-BigRational::one() / u)))
}

/// `R(u)⁻¹ = u²/(u² − 1) · R(−u)` for Yang's matrix.
pub fn yang_r_inverse(n: usize, u: &BigRational) -> Result<TensorOperator> {
    let u2 = u * u;
    if u2 == BigRational::one() {
        return Err(pole(u));
    }
    Ok(yang_r(n, &-u)?.scale(&(&u2 / (&u2 - BigRational::one()))))
}

/// Image of `S(u) ↦ (u + F − N/4)(u − F + N/4)⁻¹` for an operator `f`
/// realizing `F` on its sites.
pub fn evaluation_image(f: &TensorOperator, dim: usize, u: &BigRational) -> Result<TensorOperator> {
    let a = rat(dim as i64, 4);
    let num = f.shift(&(u - &a));
    let den = f.scale(&int(-1)).shift(&(u + &a));
    let m = den.matrix().solve(num.matrix()).map_err(|e| match e {
        Error::Singular => pole(u),
        other => other,
    })?;
    TensorOperator::new(f.n(), f.sites(), m)
}

/// Evaluation image of `S(u)` on `m` vector sites: `(u + F − N/4)(u − F + N/4)⁻¹`.
pub fn evaluation_image_s(metric: &Metric, m: usize, u: &BigRational) -> Result<TensorOperator> {
    evaluation_image(&f_image(metric, m)?, metric.n(), u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::metric::MetricKind;

    #[test]
    fn p_and_q_small_cases() {
        let m = Metric::new(3, MetricKind::OrthogonalIdentity).unwrap();
        let q = build_q(&m);
        assert_eq!(q.matrix().rank(), 1);
        assert_eq!(q.trace(), int(3));
        assert_eq!(q, build_p_transposed(3));
        let p = build_p(3);
        assert_eq!(p.mul(&p).unwrap(), TensorOperator::identity(3, 2));
        let s = Metric::new(4, MetricKind::Symplectic).unwrap();
        let (p, q) = (build_p(4), build_q(&s));
        assert_eq!(p.mul(&q).unwrap(), q.scale(&int(-1)));
    }

    #[test]
    fn f_for_identity_metric_is_antisymmetric() {
        let m = Metric::new(3, MetricKind::OrthogonalIdentity).unwrap();
        let fs = build_f(&m);
        for i in 0..3 {
            for j in 0..3 {
                let f = &fs[i * 3 + j];
                assert_eq!(f.transpose(), f.neg());
                if i != j {
                    assert_eq!(f.get(i, j), int(1));
                    assert_eq!(f.get(j, i), int(-1));
                }
            }
        }
        // for G = 1 both realizations agree
        assert_eq!(f_image(&m, 2).unwrap(), x0(&m, 2).unwrap());
    }

    #[test]
    fn r_matrix_entries_by_hand() {
        // N = 2, G = 1, u = 2: κ = 0, so R = 1 − P/2 + Q/2.
        let m = Metric::new(2, MetricKind::OrthogonalIdentity).unwrap();
        let r = build_r(&m, &int(2)).unwrap();
        let d = r.matrix().to_dense();
        let h = rat(1, 2);
        let z = int(0);
        let expected = vec![
            vec![int(1), z.clone(), z.clone(), h.clone()],
            vec![z.clone(), int(1), -h.clone(), z.clone()],
            vec![z.clone(), -h.clone(), int(1), z.clone()],
            vec![h.clone(), z.clone(), z.clone(), int(1)],
        ];
        assert_eq!(d, expected);
        assert!(build_r(&m, &int(0)).is_err());
        let m3 = Metric::new(3, MetricKind::OrthogonalIdentity).unwrap();
        assert!(build_r(&m3, &rat(1, 2)).is_err());
    }

    #[test]
    fn r_inverse_by_unitarity_matches_direct_inverse() {
        let m = Metric::new(4, MetricKind::Symplectic).unwrap();
        assert!(build_r(&m, &int(3)).is_err());
        let u = rat(7, 2);
        let inv = r_inverse(&m, &u).unwrap();
        let direct = build_r(&m, &u).unwrap().matrix().inverse().unwrap();
        assert_eq!(inv.matrix(), &direct);
    }
}
