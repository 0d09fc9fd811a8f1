use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A perfect matching on the 2n points of two rows.
///
/// Points are numbered `0..n` for the top row (T1..Tn) and `n..2n` for the
/// bottom row (B1..Bn). Every pair is stored as `(a, b)` with `a < b`, which
/// puts top before bottom and orders points within a row, and the pair list
/// is sorted. Structural equality is therefore diagram equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerDiagram {
    n: usize,
    pairs: Vec<(u8, u8)>,
}

impl BrauerDiagram {
    pub fn identity(n: usize) -> Self {
        let pairs = (0..n).map(|i| (i as u8, (n + i) as u8)).collect();
        Self { n, pairs }
    }

    /// Builds a diagram from arbitrary unordered pairs, validating the matching.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n == 0 || 2 * n > u8::MAX as usize {
            return Err(Error::IndexOutOfRange(format!("diagram size {n}")));
        }
        let mut seen = vec![false; 2 * n];
        let mut out = Vec::with_capacity(n);
        for &(a, b) in pairs {
            if a >= 2 * n || b >= 2 * n || a == b {
                return Err(Error::IndexOutOfRange(format!("edge ({a}, {b}) in B_{n}")));
            }
            for p in [a, b] {
                if std::mem::replace(&mut seen[p], true) {
                    return Err(Error::Inconsistent(format!("point {p} used twice")));
                }
            }
            out.push((a.min(b) as u8, a.max(b) as u8));
        }
        if out.len() != n {
            return Err(Error::Inconsistent(format!(
                "{} edges given, a perfect matching needs {n}",
                out.len()
            )));
        }
        out.sort_unstable();
        Ok(Self { n, pairs: out })
    }

    /// Inverse of [`BrauerDiagram::partners`]; `partner` must be a fixed-point-free involution.
    pub(crate) fn from_partners(partner: &[u8]) -> Self {
        let n = partner.len() / 2;
        let pairs = partner
            .iter()
            .enumerate()
            .filter(|&(a, &b)| (a as u8) < b)
            .map(|(a, &b)| (a as u8, b))
            .collect();
        Self { n, pairs }
    }

    /// Permutation diagram: top point `i` is joined to bottom point `perm[i]`.
    pub fn from_permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let pairs: Vec<_> = perm.iter().enumerate().map(|(i, &j)| (i, n + j)).collect();
        Self::from_pairs(n, &pairs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(u8, u8)] {
        &self.pairs
    }

    /// `partner[p]` is the point joined to `p`.
    pub fn partners(&self) -> Vec<u8> {
        let mut partner = vec![0u8; 2 * self.n];
        for &(a, b) in &self.pairs {
            partner[a as usize] = b;
            partner[b as usize] = a;
        }
        partner
    }

    pub fn is_identity(&self) -> bool {
        self.pairs
            .iter()
            .enumerate()
            .all(|(i, &(a, b))| a as usize == i && b as usize == self.n + i)
    }

    pub fn is_permutation(&self) -> bool {
        self.pairs
            .iter()
            .all(|&(a, b)| (a as usize) < self.n && (b as usize) >= self.n)
    }

    /// For a permutation diagram, `perm[i]` is the bottom point joined to top `i`.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        self.is_permutation().then(|| {
            let mut perm = vec![0; self.n];
            for &(a, b) in &self.pairs {
                perm[a as usize] = b as usize - self.n;
            }
            perm
        })
    }

    /// Number of horizontal edges in the top row (equal to the bottom count).
    pub fn num_caps(&self) -> usize {
        self.pairs
            .iter()
            .filter(|&&(_, b)| (b as usize) < self.n)
            .count()
    }

    /// Adds a vertical strand on the right: the embedding B_n → B_{n+1}.
    pub fn embed(&self) -> Self {
        let n = self.n;
        let shift = |p: u8| if (p as usize) < n { p } else { p + 1 };
        let mut pairs: Vec<_> = self
            .pairs
            .iter()
            .map(|&(a, b)| (shift(a), shift(b)))
            .collect();
        pairs.push((n as u8, (2 * n + 1) as u8));
        pairs.sort_unstable();
        Self { n: n + 1, pairs }
    }

    /// Flips the diagram upside down (the anti-automorphism fixing generators).
    pub fn flip(&self) -> Self {
        let n = self.n as u8;
        let swap = |p: u8| if p < n { p + n } else { p - n };
        let mut pairs: Vec<_> = self
            .pairs
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (swap(a), swap(b));
                (x.min(y), x.max(y))
            })
            .collect();
        pairs.sort_unstable();
        Self { n: self.n, pairs }
    }

    fn point_label(&self, p: u8) -> String {
        let p = p as usize;
        if p < self.n {
            format!("T{}", p + 1)
        } else {
            format!("B{}", p - self.n + 1)
        }
    }

    fn parse_label(n: usize, s: &str) -> Result<usize> {
        let bad = || Error::Parse(format!("bad point label {s:?}"));
        let (row, idx) = s.split_at(1.min(s.len()));
        let i: usize = idx.parse().map_err(|_| bad())?;
        if i == 0 || i > n {
            return Err(bad());
        }
        match row {
            "T" => Ok(i - 1),
            "B" => Ok(n + i - 1),
            _ => Err(bad()),
        }
    }

    /// Edge list with point labels such as `("T1", "B2")`.
    pub fn labeled_edges(&self) -> Vec<(String, String)> {
        self.pairs
            .iter()
            .map(|&(a, b)| (self.point_label(a), self.point_label(b)))
            .collect()
    }
}

/// Stacks `d1` above `d2` and traces paths through the glued middle row.
///
/// Returns the number of closed loops in the middle row together with the
/// resulting diagram; the algebra product is `ω^loops` times the diagram.
pub fn diagram_mul(d1: &BrauerDiagram, d2: &BrauerDiagram) -> Result<(usize, BrauerDiagram)> {
    if d1.n != d2.n {
        return Err(Error::SizeMismatch(d1.n, d2.n));
    }
    let n = d1.n;
    let (p1, p2) = (d1.partners(), d2.partners());
    Ok(mul_partners(n, &p1, &p2))
}

/// Follows a path from middle point `m` until it leaves the middle row.
///
/// `via_d2` says which diagram supplies the next edge. Middle point `m` is
/// bottom point `n + m` of `d1` and top point `m` of `d2`.
fn trace(
    n: usize,
    p1: &[u8],
    p2: &[u8],
    mut m: usize,
    mut via_d2: bool,
    visited: &mut [bool],
) -> u8 {
    loop {
        visited[m] = true;
        if via_d2 {
            let q = p2[m] as usize;
            if q >= n {
                return q as u8;
            }
            m = q;
        } else {
            let q = p1[n + m] as usize;
            if q < n {
                return q as u8;
            }
            m = q - n;
        }
        via_d2 = !via_d2;
    }
}

/// Core of [`diagram_mul`] on partner arrays.
pub(crate) fn mul_partners(n: usize, p1: &[u8], p2: &[u8]) -> (usize, BrauerDiagram) {
    let mut visited = vec![false; n];
    let mut out = vec![0u8; 2 * n];
    let mut join = |a: usize, b: u8| {
        out[a] = b;
        out[b as usize] = a as u8;
    };
    for t in 0..n {
        let q = p1[t] as usize;
        let end = if q < n {
            q as u8
        } else {
            trace(n, p1, p2, q - n, true, &mut visited)
        };
        join(t, end);
    }
    for pt in n..2 * n {
        let q = p2[pt] as usize;
        let end = if q >= n {
            q as u8
        } else {
            trace(n, p1, p2, q, false, &mut visited)
        };
        join(pt, end);
    }

    let mut loops = 0;
    for start in 0..n {
        if visited[start] {
            continue;
        }
        loops += 1;
        let mut m = start;
        loop {
            visited[m] = true;
            let q = p2[m] as usize;
            visited[q] = true;
            m = p1[n + q] as usize - n;
            if m == start {
                break;
            }
        }
    }
    (loops, BrauerDiagram::from_partners(&out))
}

/// All (2n−1)!! diagrams of B_n, in a deterministic order.
pub fn enumerate_diagrams(n: usize) -> Vec<BrauerDiagram> {
    fn rec(free: &[u8], partner: &mut [u8], out: &mut Vec<BrauerDiagram>) {
        let Some(&a) = free.first() else {
            out.push(BrauerDiagram::from_partners(partner));
            return;
        };
        for k in 1..free.len() {
            let b = free[k];
            let rest: Vec<u8> = free
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != 0 && i != k)
                .map(|(_, &p)| p)
                .collect();
            partner[a as usize] = b;
            partner[b as usize] = a;
            rec(&rest, partner, out);
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let free: Vec<u8> = (0..(2 * n) as u8).collect();
    let mut partner = vec![0u8; 2 * n];
    rec(&free, &mut partner, &mut out);
    out.sort();
    out
}

impl fmt::Debug for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .labeled_edges()
            .into_iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        write!(f, "{{{}}}", edges.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramRepr {
    n: usize,
    edges: Vec<(String, String)>,
}

impl Serialize for BrauerDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramRepr {
            n: self.n,
            edges: self.labeled_edges(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BrauerDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = DiagramRepr::deserialize(d)?;
        let pairs = r
            .edges
            .iter()
            .map(|(a, b)| {
                Ok((
                    BrauerDiagram::parse_label(r.n, a)?,
                    BrauerDiagram::parse_label(r.n, b)?,
                ))
            })
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        BrauerDiagram::from_pairs(r.n, &pairs).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eps1(n: usize) -> BrauerDiagram {
        let mut pairs = vec![(0, 1), (n, n + 1)];
        pairs.extend((2..n).map(|i| (i, n + i)));
        BrauerDiagram::from_pairs(n, &pairs).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        for d in enumerate_diagrams(3) {
            let id = BrauerDiagram::identity(3);
            assert_eq!(diagram_mul(&id, &d).unwrap(), (0, d.clone()));
            assert_eq!(diagram_mul(&d, &id).unwrap(), (0, d.clone()));
        }
    }

    #[test]
    fn contraction_squares_to_a_loop() {
        let e = eps1(2);
        assert_eq!(diagram_mul(&e, &e).unwrap(), (1, e));
    }

    #[test]
    fn counts_are_double_factorials() {
        let expected = [1, 3, 15, 105, 945];
        for (n, &c) in (1..=5).zip(&expected) {
            assert_eq!(enumerate_diagrams(n).len(), c);
        }
    }

    #[test]
    fn size_mismatch() {
        let r = diagram_mul(&BrauerDiagram::identity(2), &BrauerDiagram::identity(3));
        assert_eq!(r, Err(Error::SizeMismatch(2, 3)));
    }

    #[test]
    fn bad_matchings_rejected() {
        assert!(BrauerDiagram::from_pairs(2, &[(0, 1), (1, 2)]).is_err());
        assert!(BrauerDiagram::from_pairs(2, &[(0, 1)]).is_err());
        assert!(BrauerDiagram::from_pairs(2, &[(0, 4), (1, 2)]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let e = eps1(3);
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(
            s,
            r#"{"n":3,"edges":[["T1","T2"],["T3","B3"],["B1","B2"]]}"#
        );
        let back: BrauerDiagram = serde_json::from_str(&s).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn double_loop() {
        // ε1 ε3 in B4 glued to itself: two middle loops.
        let d = BrauerDiagram::from_pairs(4, &[(0, 1), (2, 3), (4, 5), (6, 7)]).unwrap();
        assert_eq!(diagram_mul(&d, &d).unwrap(), (2, d));
    }
}
