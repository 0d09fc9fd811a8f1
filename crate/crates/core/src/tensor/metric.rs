//! The bilinear form G on C^N.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::matrix::ExactMatrix;
use crate::error::{Error, Result};
use crate::scalars::{int, rat, BigRational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MetricKind {
    /// `G = 1`.
    OrthogonalIdentity,
    /// `G = [δ_{i,N−j+1}]`.
    OrthogonalAntidiagonal,
    /// `g_ij = δ_{i,N−j+1}` for `i ≤ N/2` and `−δ_{i,N−j+1}` otherwise; `N` even.
    Symplectic,
}

impl MetricKind {
    pub const ALL: [MetricKind; 3] = [
        MetricKind::OrthogonalIdentity,
        MetricKind::OrthogonalAntidiagonal,
        MetricKind::Symplectic,
    ];

    pub fn is_orthogonal(self) -> bool {
        self != MetricKind::Symplectic
    }

    /// Kinds available in dimension `n` (symplectic needs `n` even).
    pub fn available(n: usize) -> Vec<MetricKind> {
        Self::ALL
            .into_iter()
            .filter(|k| k.is_orthogonal() || n.is_multiple_of(2))
            .collect()
    }

    pub fn name(self) -> &'static str {
        match self {
            MetricKind::OrthogonalIdentity => "orthogonal-identity",
            MetricKind::OrthogonalAntidiagonal => "orthogonal-antidiagonal",
            MetricKind::Symplectic => "symplectic",
        }
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MetricKind {
    type Err = Error;

    /// `orthogonal` is accepted as a short name for the identity form.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "orthogonal" | "orthogonal-identity" => Ok(MetricKind::OrthogonalIdentity),
            "orthogonal-antidiagonal" => Ok(MetricKind::OrthogonalAntidiagonal),
            "symplectic" => Ok(MetricKind::Symplectic),
            other => Err(Error::Parse(format!("unknown metric kind {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Metric {
    n: usize,
    kind: MetricKind,
    g: ExactMatrix,
    g_inv: ExactMatrix,
}

impl Metric {
    pub fn new(n: usize, kind: MetricKind) -> Result<Self> {
        if n == 0 {
            return Err(Error::IndexOutOfRange(
                "metric dimension must be positive".into(),
            ));
        }
        if kind == MetricKind::Symplectic && n % 2 == 1 {
            return Err(Error::IndexOutOfRange(format!(
                "symplectic form needs even N, got {n}"
            )));
        }
        let g = match kind {
            MetricKind::OrthogonalIdentity => ExactMatrix::identity(n),
            MetricKind::OrthogonalAntidiagonal => {
                ExactMatrix::from_entries(n, n, (0..n).map(|i| (i, n - 1 - i, int(1))))
            }
            MetricKind::Symplectic => ExactMatrix::from_entries(
                n,
                n,
                (0..n).map(|i| (i, n - 1 - i, int(if i < n / 2 { 1 } else { -1 }))),
            ),
        };
        let g_inv = g.inverse()?;
        Ok(Self { n, kind, g, g_inv })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> MetricKind {
        self.kind
    }

    pub fn g(&self) -> &ExactMatrix {
        &self.g
    }

    pub fn g_inv(&self) -> &ExactMatrix {
        &self.g_inv
    }

    /// `+1` for symmetric forms, `−1` for skew-symmetric ones.
    pub fn sign(&self) -> i64 {
        if self.kind.is_orthogonal() {
            1
        } else {
            -1
        }
    }

    /// The Brauer parameter realized on `(C^N)^{⊗n}`: `ω = ±N`.
    pub fn omega(&self) -> BigRational {
        int(self.sign() * self.n as i64)
    }

    /// `κ = N/2 ∓ 1`.
    pub fn kappa(&self) -> BigRational {
        rat(self.n as i64, 2) - int(self.sign())
    }

    /// `A′ = G Aᵗ G⁻¹` for an `N × N` matrix.
    pub fn g_transpose(&self, a: &ExactMatrix) -> Result<ExactMatrix> {
        self.g.mul(&a.transpose())?.mul(&self.g_inv)
    }
}
