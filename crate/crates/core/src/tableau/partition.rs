use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::scalars::{int, OmegaRatFunc};

/// Box in row `row`, column `col` (both 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }

    /// Diagonal index `j − i`.
    pub fn diagonal(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Weakly decreasing list of positive parts; the empty list is ∅.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidTableau(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidTableau(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes in column `j` (1-based).
    pub fn column_length(&self, j: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    /// Boxes that can be added, top to bottom.
    pub fn addable(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for i in 0..=self.parts.len() {
            let here = self.parts.get(i).copied().unwrap_or(0);
            let above = if i == 0 {
                usize::MAX
            } else {
                self.parts[i - 1]
            };
            if here < above {
                out.push(Cell::new(i + 1, here + 1));
            }
        }
        out
    }

    /// Boxes that can be removed, top to bottom.
    pub fn removable(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (i, &p) in self.parts.iter().enumerate() {
            let below = self.parts.get(i + 1).copied().unwrap_or(0);
            if p > below {
                out.push(Cell::new(i + 1, p));
            }
        }
        out
    }

    pub fn add_cell(&self, c: Cell) -> Result<Self> {
        if !self.addable().contains(&c) {
            return Err(Error::InvalidBox(format!("{c} is not addable to {self}")));
        }
        let mut parts = self.parts.clone();
        if c.row > parts.len() {
            parts.push(1);
        } else {
            parts[c.row - 1] += 1;
        }
        Ok(Self { parts })
    }

    pub fn remove_cell(&self, c: Cell) -> Result<Self> {
        if !self.removable().contains(&c) {
            return Err(Error::InvalidBox(format!(
                "{c} is not removable from {self}"
            )));
        }
        let mut parts = self.parts.clone();
        parts[c.row - 1] -= 1;
        if parts[c.row - 1] == 0 {
            parts.pop();
        }
        Ok(Self { parts })
    }

    /// Product of all hook lengths.
    pub fn hook_product(&self) -> BigInt {
        let mut h = BigInt::one();
        for c in self.cells() {
            let arm = self.parts[c.row - 1] - c.col;
            let leg = self.column_length(c.col) - c.row;
            h *= BigInt::from(arm + leg + 1);
        }
        h
    }

    /// Content polynomial `C_λ(z) = Π_{α∈λ} (z + σ(α))`.
    pub fn content_polynomial(&self, z: &OmegaRatFunc) -> OmegaRatFunc {
        self.cells().fold(OmegaRatFunc::one(), |acc, c| {
            &acc * &(z + &OmegaRatFunc::constant(int(c.diagonal())))
        })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"[2,1]"`, `"[]"` (∅), and tolerates the bare `"2,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .unwrap_or(t)
            .trim();
        if inner.is_empty() || inner == "∅" {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}
