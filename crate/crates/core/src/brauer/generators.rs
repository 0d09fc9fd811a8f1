//! Distinguished elements of B_n(ω). All indices are 1-based.

use serde::Serialize;

use super::diagram::BrauerDiagram;
use super::element::BrauerElement;
use crate::error::{Error, Result};
use crate::scalars::{rat, OmegaRatFunc};

fn check_pair(i: usize, j: usize, n: usize) -> Result<()> {
    if i == 0 || j == 0 || i > n || j > n || i == j {
        return Err(Error::IndexOutOfRange(format!("pair ({i}, {j}) in B_{n}")));
    }
    Ok(())
}

/// Transposition diagram `s_ij`, symmetric in `i` and `j`.
pub fn s_ij(i: usize, j: usize, n: usize) -> Result<BrauerDiagram> {
    check_pair(i, j, n)?;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(i - 1, j - 1);
    BrauerDiagram::from_permutation(&perm)
}

/// Contraction diagram `ε_ij`: horizontal edges (Ti, Tj) and (Bi, Bj).
pub fn eps_ij(i: usize, j: usize, n: usize) -> Result<BrauerDiagram> {
    check_pair(i, j, n)?;
    let (a, b) = (i - 1, j - 1);
    let mut pairs = vec![(a, b), (n + a, n + b)];
    pairs.extend((0..n).filter(|&k| k != a && k != b).map(|k| (k, n + k)));
    BrauerDiagram::from_pairs(n, &pairs)
}

/// Generator `s_i = s_{i,i+1}`, 1 ≤ i ≤ n−1.
pub fn gen_s(i: usize, n: usize) -> Result<BrauerDiagram> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange(format!("s_{i} in B_{n}")));
    }
    s_ij(i, i + 1, n)
}

/// Generator `ε_i = ε_{i,i+1}`, 1 ≤ i ≤ n−1.
pub fn gen_eps(i: usize, n: usize) -> Result<BrauerDiagram> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange(format!("ε_{i} in B_{n}")));
    }
    eps_ij(i, i + 1, n)
}

/// `(ω−1)/2`, the content of the box (1,1).
pub fn first_content() -> OmegaRatFunc {
    OmegaRatFunc::linear(rat(1, 2), rat(-1, 2))
}

/// Jucys–Murphy element `x_r = (ω−1)/2 + Σ_{i<r} (s_ir − ε_ir)`.
pub fn jucys_murphy(r: usize, n: usize) -> Result<BrauerElement> {
    if r == 0 || r > n {
        return Err(Error::IndexOutOfRange(format!("x_{r} in B_{n}")));
    }
    let mut x = BrauerElement::scalar(n, first_content());
    let minus = OmegaRatFunc::from_int(-1);
    for i in 1..r {
        x.add_term(s_ij(i, r, n)?, &OmegaRatFunc::one());
        x.add_term(eps_ij(i, r, n)?, &minus);
    }
    Ok(x)
}

/// Element of the group algebra C(ω)[S_n], stored on permutation diagrams.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(transparent)]
pub struct SymGroupElement(BrauerElement);

impl SymGroupElement {
    pub fn new(e: BrauerElement) -> Result<Self> {
        if e.terms().keys().all(BrauerDiagram::is_permutation) {
            Ok(Self(e))
        } else {
            Err(Error::Inconsistent(
                "non-permutation diagram in group algebra element".into(),
            ))
        }
    }

    pub fn identity(n: usize) -> Self {
        Self(BrauerElement::identity(n))
    }

    pub fn as_element(&self) -> &BrauerElement {
        &self.0
    }

    pub fn into_element(self) -> BrauerElement {
        self.0
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self(&self.0 * &rhs.0)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self(&self.0 + &rhs.0)
    }

    pub fn scale(&self, c: &OmegaRatFunc) -> Self {
        Self(self.0.scale(c))
    }
}

/// Quotient by the ideal generated by the ε_i: drop every diagram with a horizontal edge.
pub fn project_symmetric_group(a: &BrauerElement) -> SymGroupElement {
    let terms = a
        .terms()
        .iter()
        .filter(|(d, _)| d.is_permutation())
        .map(|(d, c)| (d.clone(), c.clone()));
    SymGroupElement(BrauerElement::from_terms(a.n(), terms).expect("same size"))
}

/// Outcome of one relation family in [`check_presentation`].
#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub instances: usize,
    pub passed: bool,
}

/// A named family of defining relations, each instance a pair `lhs = rhs`.
pub type RelationFamily = (String, Vec<(BrauerElement, BrauerElement)>);

/// Verifies every defining relation of B_n(ω) on the constructed generators.
pub fn check_presentation(n: usize) -> Result<Vec<RelationCheck>> {
    Ok(presentation_relations(n)?
        .into_iter()
        .map(|(relation, cases)| RelationCheck {
            passed: cases.iter().all(|(l, r)| l == r),
            instances: cases.len(),
            relation,
        })
        .collect())
}

/// Both sides of every defining relation of B_n(ω), grouped by family.
pub fn presentation_relations(n: usize) -> Result<Vec<RelationFamily>> {
    if n < 2 {
        return Err(Error::IndexOutOfRange(format!(
            "presentation check needs n ≥ 2, got {n}"
        )));
    }
    let s: Vec<BrauerElement> = (1..n)
        .map(|i| gen_s(i, n).map(BrauerElement::from_diagram))
        .collect::<Result<_>>()?;
    let e: Vec<BrauerElement> = (1..n)
        .map(|i| gen_eps(i, n).map(BrauerElement::from_diagram))
        .collect::<Result<_>>()?;
    let one = BrauerElement::identity(n);
    let omega = OmegaRatFunc::omega();
    let m = n - 1;

    let mut out = Vec::new();
    let mut family = |name: &str, cases: Vec<(BrauerElement, BrauerElement)>| {
        out.push((name.to_string(), cases));
    };

    family(
        "s_i^2 = 1",
        (0..m).map(|i| (&s[i] * &s[i], one.clone())).collect(),
    );
    family(
        "eps_i^2 = omega eps_i",
        (0..m)
            .map(|i| (&e[i] * &e[i], e[i].scale(&omega)))
            .collect(),
    );
    family(
        "s_i eps_i = eps_i s_i = eps_i",
        (0..m)
            .flat_map(|i| [(&s[i] * &e[i], e[i].clone()), (&e[i] * &s[i], e[i].clone())])
            .collect(),
    );
    let far: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| {
            (0..m)
                .filter(move |&j| i.abs_diff(j) > 1)
                .map(move |j| (i, j))
        })
        .collect();
    family(
        "s_i s_j = s_j s_i, |i-j| > 1",
        far.iter()
            .map(|&(i, j)| (&s[i] * &s[j], &s[j] * &s[i]))
            .collect(),
    );
    family(
        "eps_i eps_j = eps_j eps_i, |i-j| > 1",
        far.iter()
            .map(|&(i, j)| (&e[i] * &e[j], &e[j] * &e[i]))
            .collect(),
    );
    family(
        "s_i eps_j = eps_j s_i, |i-j| > 1",
        far.iter()
            .map(|&(i, j)| (&s[i] * &e[j], &e[j] * &s[i]))
            .collect(),
    );
    let adj: Vec<usize> = (0..m.saturating_sub(1)).collect();
    family(
        "s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}",
        adj.iter()
            .map(|&i| {
                (
                    &(&s[i] * &s[i + 1]) * &s[i],
                    &(&s[i + 1] * &s[i]) * &s[i + 1],
                )
            })
            .collect(),
    );
    family(
        "eps_i eps_{i+1} eps_i = eps_i, eps_{i+1} eps_i eps_{i+1} = eps_{i+1}",
        adj.iter()
            .flat_map(|&i| {
                [
                    (&(&e[i] * &e[i + 1]) * &e[i], e[i].clone()),
                    (&(&e[i + 1] * &e[i]) * &e[i + 1], e[i + 1].clone()),
                ]
            })
            .collect(),
    );
    family(
        "s_i eps_{i+1} eps_i = s_{i+1} eps_i, eps_{i+1} eps_i s_{i+1} = eps_{i+1} s_i",
        adj.iter()
            .flat_map(|&i| {
                [
                    (&(&s[i] * &e[i + 1]) * &e[i], &s[i + 1] * &e[i]),
                    (&(&e[i + 1] * &e[i]) * &s[i + 1], &e[i + 1] * &s[i]),
                ]
            })
            .collect(),
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_pictures() {
        let s = gen_s(1, 2).unwrap();
        assert_eq!(s, BrauerDiagram::from_pairs(2, &[(0, 3), (1, 2)]).unwrap());
        let e = gen_eps(1, 2).unwrap();
        assert_eq!(e, BrauerDiagram::from_pairs(2, &[(0, 1), (2, 3)]).unwrap());
        assert!(gen_s(2, 2).is_err());
        assert!(gen_eps(0, 2).is_err());
    }

    #[test]
    fn long_transpositions() {
        let s13 = s_ij(1, 3, 3).unwrap();
        assert_eq!(
            s13,
            BrauerDiagram::from_pairs(3, &[(0, 5), (1, 4), (2, 3)]).unwrap()
        );
        let e13 = eps_ij(1, 3, 3).unwrap();
        assert_eq!(
            e13,
            BrauerDiagram::from_pairs(3, &[(0, 2), (3, 5), (1, 4)]).unwrap()
        );
        assert_eq!(eps_ij(3, 1, 3).unwrap(), e13);
        assert!(s_ij(2, 2, 3).is_err());
        assert!(eps_ij(1, 4, 3).is_err());
    }

    #[test]
    fn first_jm_is_scalar() {
        let x1 = jucys_murphy(1, 3).unwrap();
        assert_eq!(x1.as_scalar(), Some(first_content()));
        assert!(jucys_murphy(4, 3).is_err());
    }
}
