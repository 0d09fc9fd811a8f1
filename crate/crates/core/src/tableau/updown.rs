use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::partition::{Cell, Partition};
use crate::error::{Error, Result};
use crate::scalars::{rat, OmegaRatFunc};

/// One step `Λ_{r−1} → Λ_r` of an updown tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub cell: Cell,
    pub added: bool,
}

impl Step {
    /// `±((ω−1)/2 + j − i)`, positive for an addition.
    pub fn content(&self) -> OmegaRatFunc {
        let c = box_content(self.cell);
        if self.added {
            c
        } else {
            -c
        }
    }
}

/// `(ω−1)/2 + j − i`.
pub fn box_content(c: Cell) -> OmegaRatFunc {
    OmegaRatFunc::linear(rat(1, 2), rat(2 * c.diagonal() - 1, 2))
}

/// Sequence `(Λ_1, …, Λ_n)` starting at `(1)`, each shape one box away from the previous.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpdownTableau {
    shapes: Vec<Partition>,
}

impl UpdownTableau {
    pub fn new(shapes: Vec<Partition>) -> Result<Self> {
        if shapes.is_empty() {
            return Err(Error::InvalidTableau("empty shape sequence".into()));
        }
        let mut prev = Partition::empty();
        for (r, sh) in shapes.iter().enumerate() {
            if step_between(&prev, sh).is_none() {
                return Err(Error::InvalidTableau(format!(
                    "Λ_{} = {sh} is not one box away from {prev}",
                    r + 1
                )));
            }
            prev = sh.clone();
        }
        Ok(Self { shapes })
    }

    /// Builds from raw part lists, e.g. `&[&[1], &[1, 1], &[1]]`.
    pub fn from_parts(parts: &[&[usize]]) -> Result<Self> {
        let shapes = parts
            .iter()
            .map(|p| Partition::new(p.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(shapes)
    }

    pub fn n(&self) -> usize {
        self.shapes.len()
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    /// The final shape Λ_n.
    pub fn shape(&self) -> &Partition {
        self.shapes.last().expect("nonempty")
    }

    /// `Λ_{r}` with `Λ_0 = ∅`.
    pub fn shape_at(&self, r: usize) -> Partition {
        if r == 0 {
            Partition::empty()
        } else {
            self.shapes[r - 1].clone()
        }
    }

    /// The tableau `(Λ_1, …, Λ_r)`.
    pub fn prefix(&self, r: usize) -> Result<Self> {
        if r == 0 || r > self.n() {
            return Err(Error::IndexOutOfRange(format!(
                "prefix {r} of a length-{} tableau",
                self.n()
            )));
        }
        Ok(Self {
            shapes: self.shapes[..r].to_vec(),
        })
    }

    /// The step into `Λ_r`, `1 ≤ r ≤ n`.
    pub fn step(&self, r: usize) -> Step {
        step_between(&self.shape_at(r - 1), &self.shapes[r - 1]).expect("validated")
    }

    pub fn steps(&self) -> Vec<Step> {
        (1..=self.n()).map(|r| self.step(r)).collect()
    }

    /// No box is ever removed.
    pub fn is_standard(&self) -> bool {
        self.steps().iter().all(|s| s.added)
    }

    /// Contents `c_1, …, c_n`.
    pub fn contents(&self) -> Vec<OmegaRatFunc> {
        self.steps().iter().map(Step::content).collect()
    }

    /// Classical contents `σ_r = j − i` of a standard tableau.
    pub fn classical_contents(&self) -> Result<Vec<i64>> {
        self.steps()
            .iter()
            .map(|s| {
                if s.added {
                    Ok(s.cell.diagonal())
                } else {
                    Err(Error::InvalidTableau(format!("{self} is not standard")))
                }
            })
            .collect()
    }

    /// Extends by one step.
    pub fn push(&self, next: Partition) -> Result<Self> {
        let mut shapes = self.shapes.clone();
        shapes.push(next);
        Self::new(shapes)
    }
}

fn step_between(prev: &Partition, next: &Partition) -> Option<Step> {
    let (a, b) = (prev.parts(), next.parts());
    let rows = a.len().max(b.len());
    let mut diff = None;
    for i in 0..rows {
        let x = a.get(i).copied().unwrap_or(0) as i64;
        let y = b.get(i).copied().unwrap_or(0) as i64;
        match y - x {
            0 => {}
            1 | -1 if diff.is_none() => diff = Some((i, y - x)),
            _ => return None,
        }
    }
    let (i, d) = diff?;
    let cell = if d == 1 {
        Cell::new(i + 1, b[i])
    } else {
        Cell::new(i + 1, a[i])
    };
    Some(Step {
        cell,
        added: d == 1,
    })
}

/// All updown tableaux of length `n`, optionally ending at `shape`, sorted
/// lexicographically on the shape sequence.
pub fn enumerate_updown(n: usize, shape: Option<&Partition>) -> Vec<UpdownTableau> {
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut path = vec![Partition::new(vec![1]).expect("valid")];
    extend(n, shape, &mut path, &mut out);
    out.sort();
    out
}

fn extend(
    n: usize,
    target: Option<&Partition>,
    path: &mut Vec<Partition>,
    out: &mut Vec<UpdownTableau>,
) {
    let last = path.last().expect("nonempty").clone();
    let remaining = n - path.len();
    if let Some(t) = target {
        // Every later step changes the size by one, so the target must stay reachable.
        let gap = last.size().abs_diff(t.size());
        if gap > remaining || (remaining - gap) % 2 == 1 {
            return;
        }
    }
    if remaining == 0 {
        if target.is_none_or(|t| *t == last) {
            out.push(UpdownTableau {
                shapes: path.clone(),
            });
        }
        return;
    }
    let nexts = last
        .addable()
        .into_iter()
        .map(|c| last.add_cell(c))
        .chain(last.removable().into_iter().map(|c| last.remove_cell(c)));
    for next in nexts {
        path.push(next.expect("box taken from the shape's own lists"));
        extend(n, target, path, out);
        path.pop();
    }
}

/// Contents of every box other than `exclude` that can be added to (+) or
/// removed from (−) `mu`: addable boxes top to bottom, then removable ones.
pub fn branching_contents(mu: &Partition, exclude: Cell) -> Result<Vec<OmegaRatFunc>> {
    let add = mu.addable();
    let rem = mu.removable();
    if !add.contains(&exclude) && !rem.contains(&exclude) {
        return Err(Error::InvalidBox(format!(
            "{exclude} is neither addable to nor removable from {mu}"
        )));
    }
    Ok(add
        .into_iter()
        .filter(|&c| c != exclude)
        .map(box_content)
        .chain(
            rem.into_iter()
                .filter(|&c| c != exclude)
                .map(|c| -box_content(c)),
        )
        .collect())
}

impl fmt::Display for UpdownTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.shapes.iter().map(Partition::to_string).collect();
        f.write_str(&parts.join(";"))
    }
}

impl FromStr for UpdownTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let shapes = s
            .split(';')
            .map(str::parse::<Partition>)
            .collect::<Result<Vec<_>>>()?;
        Self::new(shapes)
    }
}

impl Serialize for UpdownTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for UpdownTableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}
