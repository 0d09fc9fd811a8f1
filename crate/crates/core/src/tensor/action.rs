//! The Brauer algebra acting on `(C^N)^{⊗n}` at `ω = ±N`.

use std::collections::{BTreeMap, VecDeque};

use super::matrix::ExactMatrix;
use super::metric::Metric;
use super::operators::{build_p, build_q, TensorOperator};
use crate::brauer::{diagram_mul, gen_eps, gen_s, BrauerDiagram, BrauerElement};
use crate::error::{Error, Result};
use crate::scalars::{int, BigRational};

/// Images of all diagrams of B_n under `s_i ↦ ±P_{i,i+1}`, `ε_i ↦ ±Q_{i,i+1}`.
///
/// Each diagram is reached from the identity by right multiplication with
/// generators, and its image is the matching product of generator images.
#[derive(Clone, Debug)]
pub struct BrauerAction {
    metric: Metric,
    n: usize,
    images: BTreeMap<BrauerDiagram, ExactMatrix>,
}

impl BrauerAction {
    pub fn new(metric: &Metric, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::IndexOutOfRange("Brauer action needs n ≥ 1".into()));
        }
        let dim = metric.n();
        let sign = int(metric.sign());
        let omega = metric.omega();
        let mut gens = Vec::new();
        for i in 1..n {
            let p = build_p(dim).scale(&sign).on(&[i - 1, i], n)?.into_matrix();
            let q = build_q(metric)
                .scale(&sign)
                .on(&[i - 1, i], n)?
                .into_matrix();
            gens.push((gen_s(i, n)?, p));
            gens.push((gen_eps(i, n)?, q));
        }
        let mut images = BTreeMap::new();
        let id = BrauerDiagram::identity(n);
        images.insert(id.clone(), ExactMatrix::identity(dim.pow(n as u32)));
        let mut queue = VecDeque::from([id]);
        while let Some(d) = queue.pop_front() {
            for (g, gm) in &gens {
                let (loops, prod) = diagram_mul(&d, g)?;
                if images.contains_key(&prod) {
                    continue;
                }
                // image(d)·image(g) = ω^loops · image(d g)
                let mut m = images[&d].mul(gm)?;
                for _ in 0..loops {
                    m = m.scale(&(BigRational::from_integer(1.into()) / &omega));
                }
                images.insert(prod.clone(), m);
                queue.push_back(prod);
            }
        }
        Ok(Self {
            metric: metric.clone(),
            n,
            images,
        })
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of diagrams with a computed image; `(2n − 1)!!` once complete.
    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn diagram(&self, d: &BrauerDiagram) -> Result<TensorOperator> {
        let m = self
            .images
            .get(d)
            .ok_or_else(|| Error::IndexOutOfRange(format!("no image for diagram {d}")))?;
        TensorOperator::new(self.metric.n(), self.n, m.clone())
    }

    /// Image of `a` with coefficients specialized at `ω = ±N`.
    pub fn element(&self, a: &BrauerElement) -> Result<TensorOperator> {
        if a.n() != self.n {
            return Err(Error::SizeMismatch(a.n(), self.n));
        }
        let omega = self.metric.omega();
        let dim = self.metric.n().pow(self.n as u32);
        let mut acc = ExactMatrix::zeros(dim, dim);
        for (d, c) in a.terms() {
            let v = c.evaluate(&omega)?;
            acc = acc.add(&self.images[d].scale(&v))?;
        }
        TensorOperator::new(self.metric.n(), self.n, acc)
    }
}

/// Image of a single element; builds the diagram table on the way.
pub fn brauer_action(a: &BrauerElement, metric: &Metric) -> Result<TensorOperator> {
    BrauerAction::new(metric, a.n())?.element(a)
}
