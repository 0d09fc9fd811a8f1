//! Exact rational matrices.
//!
//! Entries are stored row-sparse as integer numerators over one shared
//! positive denominator, kept in lowest terms. Products then run in integer
//! arithmetic and only the final normalization takes gcds.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalars::{format_rational, BigRational};

type Row = Vec<(usize, BigInt)>;

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Row>,
    den: BigInt,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Vec::new(); rows],
            den: BigInt::one(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &BigRational::one())
    }

    /// `c · 1`.
    pub fn scalar(n: usize, c: &BigRational) -> Self {
        Self::from_entries(n, n, (0..n).map(|i| (i, i, c.clone())))
    }

    /// Builds a matrix from `(row, col, value)` triples; repeated positions add up.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, BigRational)>,
    ) -> Self {
        let mut acc: Vec<BTreeMap<usize, BigRational>> = vec![BTreeMap::new(); rows];
        for (i, j, v) in entries {
            assert!(
                i < rows && j < cols,
                "entry ({i}, {j}) outside {rows}×{cols}"
            );
            if v.is_zero() {
                continue;
            }
            *acc[i].entry(j).or_insert_with(BigRational::zero) += v;
        }
        let den = acc
            .iter()
            .flat_map(|r| r.values())
            .fold(BigInt::one(), |l, v| l.lcm(v.denom()));
        let data = acc
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.numer() * (&den / v.denom())))
                    .collect()
            })
            .collect();
        let mut m = Self {
            rows,
            cols,
            data,
            den,
        };
        m.normalize();
        m
    }

    pub fn from_dense(rows: &[Vec<BigRational>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Self::from_entries(
            rows.len(),
            cols,
            rows.iter()
                .enumerate()
                .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, v)| (i, j, v.clone()))),
        )
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> BigRational) -> Self {
        Self::from_entries(
            rows,
            cols,
            (0..rows)
                .flat_map(|i| (0..cols).map(move |j| (i, j)))
                .map(|(i, j)| (i, j, f(i, j))),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn get(&self, i: usize, j: usize) -> BigRational {
        match self.data[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => BigRational::new(self.data[i][k].1.clone(), self.den.clone()),
            Err(_) => BigRational::zero(),
        }
    }

    /// Nonzero entries of row `i`.
    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, BigRational)> + '_ {
        self.data[i]
            .iter()
            .map(|(j, v)| (*j, BigRational::new(v.clone(), self.den.clone())))
    }

    /// All nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, BigRational)> + '_ {
        (0..self.rows).flat_map(move |i| self.row(i).map(move |(j, v)| (i, j, v)))
    }

    pub fn to_dense(&self) -> Vec<Vec<BigRational>> {
        let mut out = vec![vec![BigRational::zero(); self.cols]; self.rows];
        for (i, j, v) in self.entries() {
            out[i][j] = v;
        }
        out
    }

    fn normalize(&mut self) {
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -&self.den;
            for r in &mut self.data {
                for (_, v) in r.iter_mut() {
                    *v = -&*v;
                }
            }
        }
        let mut g = self.den.clone();
        'outer: for r in &self.data {
            for (_, v) in r {
                g = g.gcd(v);
                if g.is_one() {
                    break 'outer;
                }
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for r in &mut self.data {
                for (_, v) in r.iter_mut() {
                    *v /= &g;
                }
            }
        }
    }

    fn check_same_shape(&self, rhs: &Self) -> Result<()> {
        if self.rows != rhs.rows {
            return Err(Error::SizeMismatch(self.rows, rhs.rows));
        }
        if self.cols != rhs.cols {
            return Err(Error::SizeMismatch(self.cols, rhs.cols));
        }
        Ok(())
    }

    fn combine(&self, rhs: &Self, sign: i8) -> Result<Self> {
        self.check_same_shape(rhs)?;
        let l = self.den.lcm(&rhs.den);
        let (fa, fb) = (&l / &self.den, &l / &rhs.den);
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut x, mut y) = (a.iter().peekable(), b.iter().peekable());
                loop {
                    let next = match (x.peek(), y.peek()) {
                        (None, None) => break,
                        (Some(&&(j, ref v)), None) => {
                            x.next();
                            (j, v * &fa)
                        }
                        (None, Some(&&(j, ref w))) => {
                            y.next();
                            (j, w * &fb * sign)
                        }
                        (Some(&&(j, ref v)), Some(&&(k, ref w))) => {
                            if j < k {
                                x.next();
                                (j, v * &fa)
                            } else if k < j {
                                y.next();
                                (k, w * &fb * sign)
                            } else {
                                x.next();
                                y.next();
                                (j, v * &fa + w * &fb * sign)
                            }
                        }
                    };
                    if !next.1.is_zero() {
                        out.push(next);
                    }
                }
                out
            })
            .collect();
        let mut m = Self {
            rows: self.rows,
            cols: self.cols,
            data,
            den: l,
        };
        m.normalize();
        Ok(m)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.combine(rhs, 1)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.combine(rhs, -1)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::SizeMismatch(self.cols, rhs.rows));
        }
        let mut acc = vec![BigInt::zero(); rhs.cols];
        let mut touched = vec![false; rhs.cols];
        let mut cols_hit = Vec::new();
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            for (k, a) in row {
                for (j, b) in &rhs.data[*k] {
                    if !touched[*j] {
                        touched[*j] = true;
                        cols_hit.push(*j);
                    }
                    acc[*j] += a * b;
                }
            }
            cols_hit.sort_unstable();
            let mut out = Vec::with_capacity(cols_hit.len());
            for &j in &cols_hit {
                touched[j] = false;
                let v = std::mem::take(&mut acc[j]);
                if !v.is_zero() {
                    out.push((j, v));
                }
            }
            cols_hit.clear();
            data.push(out);
        }
        let mut m = Self {
            rows: self.rows,
            cols: rhs.cols,
            data,
            den: &self.den * &rhs.den,
        };
        m.normalize();
        Ok(m)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        let mut m = self.clone();
        for r in &mut m.data {
            for (_, v) in r.iter_mut() {
                *v *= c.numer();
            }
        }
        m.den *= c.denom();
        m.normalize();
        m
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    /// `self + c · 1`.
    pub fn add_scalar(&self, c: &BigRational) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::SizeMismatch(self.rows, self.cols));
        }
        self.add(&Self::scalar(self.rows, c))
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<Row> = vec![Vec::new(); self.cols];
        for (i, r) in self.data.iter().enumerate() {
            for (j, v) in r {
                data[*j].push((i, v.clone()));
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
            den: self.den.clone(),
        }
    }

    pub fn trace(&self) -> BigRational {
        let t = (0..self.rows.min(self.cols)).fold(BigInt::zero(), |acc, i| {
            match self.data[i].binary_search_by_key(&i, |(c, _)| *c) {
                Ok(k) => acc + &self.data[i][k].1,
                Err(_) => acc,
            }
        });
        BigRational::new(t, self.den.clone())
    }

    /// Kronecker product; `self`'s index is the more significant one.
    pub fn kron(&self, rhs: &Self) -> Self {
        let mut data = Vec::with_capacity(self.rows * rhs.rows);
        for a in &self.data {
            for b in &rhs.data {
                let mut out = Vec::with_capacity(a.len() * b.len());
                for (i, x) in a {
                    for (j, y) in b {
                        out.push((i * rhs.cols + j, x * y));
                    }
                }
                data.push(out);
            }
        }
        Self {
            rows: self.rows * rhs.rows,
            cols: self.cols * rhs.cols,
            data,
            den: &self.den * &rhs.den,
        }
    }

    /// Largest absolute numerator among the entries of `self − rhs` in lowest terms.
    pub fn residual(&self, rhs: &Self) -> Result<BigInt> {
        let d = self.sub(rhs)?;
        Ok(d.entries()
            .map(|(_, _, v)| v.numer().abs())
            .max()
            .unwrap_or_default())
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let pos: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut out: Row = r
                    .iter()
                    .filter_map(|(j, v)| pos.get(j).map(|&k| (k, v.clone())))
                    .collect();
                out.sort_unstable_by_key(|(k, _)| *k);
                out
            })
            .collect();
        let mut m = Self {
            rows: self.rows,
            cols: cols.len(),
            data,
            den: self.den.clone(),
        };
        m.normalize();
        m
    }

    /// Keeps the listed rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut m = Self {
            rows: rows.len(),
            cols: self.cols,
            data: rows.iter().map(|&i| self.data[i].clone()).collect(),
            den: self.den.clone(),
        };
        m.normalize();
        m
    }

    /// Reduced row echelon form of the row space (only nonzero rows) and its pivot columns.
    pub fn row_echelon(&self) -> (Vec<Vec<(usize, BigRational)>>, Vec<usize>) {
        let mut basis: Vec<Vec<(usize, BigRational)>> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        for i in 0..self.rows {
            let mut v: BTreeMap<usize, BigRational> = self.row(i).collect();
            for (b, &p) in basis.iter().zip(&pivots) {
                if let Some(c) = v.get(&p).cloned() {
                    for (j, w) in b {
                        let e = v.entry(*j).or_insert_with(BigRational::zero);
                        *e -= &c * w;
                        if e.is_zero() {
                            v.remove(j);
                        }
                    }
                }
            }
            let Some((&p, lead)) = v.iter().next() else {
                continue;
            };
            let lead = lead.clone();
            let row: Vec<(usize, BigRational)> =
                v.into_iter().map(|(j, w)| (j, w / &lead)).collect();
            // keep earlier rows reduced at the new pivot
            for b in basis.iter_mut() {
                if let Ok(k) = b.binary_search_by_key(&p, |(c, _)| *c) {
                    let c = b[k].1.clone();
                    let mut m: BTreeMap<usize, BigRational> = b.drain(..).collect();
                    for (j, w) in &row {
                        let e = m.entry(*j).or_insert_with(BigRational::zero);
                        *e -= &c * w;
                        if e.is_zero() {
                            m.remove(j);
                        }
                    }
                    *b = m.into_iter().collect();
                }
            }
            basis.push(row);
            pivots.push(p);
        }
        (basis, pivots)
    }

    pub fn rank(&self) -> usize {
        if self.rows <= self.cols {
            self.row_echelon().1.len()
        } else {
            self.transpose().row_echelon().1.len()
        }
    }

    /// Indices of a maximal linearly independent set of columns, chosen greedily from the left.
    pub fn independent_columns(&self) -> Vec<usize> {
        let t = self.transpose();
        let mut basis: Vec<BTreeMap<usize, BigRational>> = Vec::new();
        let mut pivots = Vec::new();
        let mut chosen = Vec::new();
        for c in 0..t.rows {
            let mut v: BTreeMap<usize, BigRational> = t.row(c).collect();
            for (b, &p) in basis.iter().zip(&pivots) {
                if let Some(x) = v.get(&p).cloned() {
                    for (j, w) in b {
                        let e = v.entry(*j).or_insert_with(BigRational::zero);
                        *e -= &x * w;
                        if e.is_zero() {
                            v.remove(j);
                        }
                    }
                }
            }
            if let Some((&p, lead)) = v.iter().next() {
                let lead = lead.clone();
                basis.push(v.into_iter().map(|(j, w)| (j, w / &lead)).collect());
                pivots.push(p);
                chosen.push(c);
            }
        }
        chosen
    }

    /// Solves `self · X = rhs` for square nonsingular `self`.
    pub fn solve(&self, rhs: &Self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::SizeMismatch(self.rows, self.cols));
        }
        if rhs.rows != self.rows {
            return Err(Error::SizeMismatch(self.rows, rhs.rows));
        }
        let n = self.rows;
        let mut a = self.to_dense();
        let mut b = rhs.to_dense();
        for col in 0..n {
            let p = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(Error::Singular)?;
            a.swap(col, p);
            b.swap(col, p);
            let inv = BigRational::one() / &a[col][col];
            let (pa, pb) = (scale_row(&a[col], &inv), scale_row(&b[col], &inv));
            a[col] = pa;
            b[col] = pb;
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                let (ar, br) = (axpy(&a[r], &f, &a[col]), axpy(&b[r], &f, &b[col]));
                a[r] = ar;
                b[r] = br;
            }
        }
        Ok(Self::from_dense(&b))
    }

    pub fn inverse(&self) -> Result<Self> {
        self.solve(&Self::identity(self.rows))
    }

    /// The operator on `(C^n)^{⊗total}` acting as `self` on the listed sites
    /// (in that order) and as the identity elsewhere. Site 0 is the most
    /// significant digit of a basis index.
    pub fn embed_sites(&self, n: usize, positions: &[usize], total: usize) -> Result<Self> {
        let k = positions.len();
        let local = n.pow(k as u32);
        if !self.is_square() || self.rows != local {
            return Err(Error::SizeMismatch(self.rows, local));
        }
        let mut seen = vec![false; total];
        for &p in positions {
            if p >= total || std::mem::replace(&mut seen[p], true) {
                return Err(Error::IndexOutOfRange(format!("site {p} of {total}")));
            }
        }
        let dim = n.pow(total as u32);
        let stride = |p: usize| n.pow((total - 1 - p) as u32);
        // offset[l] = contribution of local index l to a global index
        let offset: Vec<usize> = (0..local)
            .map(|l| {
                (0..k)
                    .map(|t| (l / n.pow((k - 1 - t) as u32)) % n * stride(positions[t]))
                    .sum()
            })
            .collect();
        let mut data = Vec::with_capacity(dim);
        for r in 0..dim {
            let lr: usize = (0..k)
                .map(|t| (r / stride(positions[t])) % n * n.pow((k - 1 - t) as u32))
                .sum();
            let base = r - offset[lr];
            let mut row: Row = self.data[lr]
                .iter()
                .map(|(lc, v)| (base + offset[*lc], v.clone()))
                .collect();
            row.sort_unstable_by_key(|(c, _)| *c);
            data.push(row);
        }
        Ok(Self {
            rows: dim,
            cols: dim,
            data,
            den: self.den.clone(),
        })
    }

    /// Transposes tensor factor `site` of an operator on `(C^n)^{⊗sites}`.
    pub fn partial_transpose(&self, n: usize, site: usize, sites: usize) -> Result<Self> {
        let dim = n.pow(sites as u32);
        if !self.is_square() || self.rows != dim {
            return Err(Error::SizeMismatch(self.rows, dim));
        }
        if site >= sites {
            return Err(Error::IndexOutOfRange(format!("site {site} of {sites}")));
        }
        let st = n.pow((sites - 1 - site) as u32);
        let mut data: Vec<Row> = vec![Vec::new(); dim];
        for (r, row) in self.data.iter().enumerate() {
            let dr = (r / st) % n;
            for (c, v) in row {
                let dc = (c / st) % n;
                data[r - dr * st + dc * st].push((c - dc * st + dr * st, v.clone()));
            }
        }
        for row in &mut data {
            row.sort_unstable_by_key(|(c, _)| *c);
        }
        Ok(Self {
            rows: dim,
            cols: dim,
            data,
            den: self.den.clone(),
        })
    }

    /// Columns forming a basis of the column space, certified by elimination
    /// modulo a large prime: columns independent mod p are independent over Q.
    /// The result may miss columns when p divides a minor, so it is a lower
    /// bound for the rank; callers compare its length with a known rank.
    pub fn independent_columns_mod_p(&self) -> Vec<usize> {
        const P: u64 = (1 << 61) - 1;
        let pb = BigInt::from(P);
        let reduce = |x: &BigInt| -> u64 {
            let r = x.mod_floor(&pb);
            r.to_u64_digits().1.first().copied().unwrap_or(0)
        };
        if reduce(&self.den) == 0 {
            return Vec::new();
        }
        let t = self.transpose();
        let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
        let mut chosen = Vec::new();
        for c in 0..t.rows {
            let mut v = vec![0u64; t.cols];
            for (j, x) in &t.data[c] {
                v[*j] = reduce(x);
            }
            for (p, b) in &basis {
                let f = v[*p];
                if f != 0 {
                    for (x, y) in v.iter_mut().zip(b) {
                        *x = sub_mod(*x, mul_mod(f, *y, P), P);
                    }
                }
            }
            if let Some(p) = v.iter().position(|&x| x != 0) {
                let inv = pow_mod(v[p], P - 2, P);
                for x in v.iter_mut() {
                    *x = mul_mod(*x, inv, P);
                }
                basis.push((p, v));
                chosen.push(c);
            }
        }
        chosen
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn scale_row(r: &[BigRational], c: &BigRational) -> Vec<BigRational> {
    r.iter()
        .map(|x| if x.is_zero() { x.clone() } else { x * c })
        .collect()
}

/// `r − f · p`, skipping zero entries of `p`.
fn axpy(r: &[BigRational], f: &BigRational, p: &[BigRational]) -> Vec<BigRational> {
    r.iter()
        .zip(p)
        .map(|(x, y)| if y.is_zero() { x.clone() } else { x - f * y })
        .collect()
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}×{} [", self.rows, self.cols)?;
        for (i, j, v) in self.entries().take(64) {
            writeln!(f, "  ({i},{j}) {}", format_rational(&v))?;
        }
        if self.nnz() > 64 {
            writeln!(f, "  … {} more", self.nnz() - 64)?;
        }
        write!(f, "]")
    }
}
