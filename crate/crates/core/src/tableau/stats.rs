use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use super::partition::Partition;
use super::updown::UpdownTableau;
use crate::error::Result;
use crate::scalars::{int, rat, BigRational, OmegaRatFunc};

/// Diagonal sums of box additions (`d_k`) and removals (`d′_k`) along a
/// tableau, with the derived `g_k` and `g′_k`. Zero entries are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DiagonalStats {
    pub d: BTreeMap<i64, i64>,
    pub d_prime: BTreeMap<i64, i64>,
    pub g: BTreeMap<i64, i64>,
    pub g_prime: BTreeMap<i64, i64>,
}

impl DiagonalStats {
    pub fn d(&self, k: i64) -> i64 {
        self.d.get(&k).copied().unwrap_or(0)
    }

    pub fn d_prime(&self, k: i64) -> i64 {
        self.d_prime.get(&k).copied().unwrap_or(0)
    }

    pub fn g(&self, k: i64) -> i64 {
        self.g.get(&k).copied().unwrap_or(0)
    }

    pub fn g_prime(&self, k: i64) -> i64 {
        self.g_prime.get(&k).copied().unwrap_or(0)
    }
}

/// Statistics of the prefix `U`, counting every step including `∅ → (1)`.
pub fn diagonal_stats(u: &UpdownTableau) -> DiagonalStats {
    let mut d = BTreeMap::new();
    let mut d_prime = BTreeMap::new();
    for s in u.steps() {
        let map = if s.added { &mut d } else { &mut d_prime };
        *map.entry(s.cell.diagonal()).or_insert(0) += 1;
    }
    let second_difference = |m: &BTreeMap<i64, i64>, delta_at_zero: bool| {
        let get = |k: i64| m.get(&k).copied().unwrap_or(0);
        let mut ks: Vec<i64> = m.keys().flat_map(|&k| [k - 1, k, k + 1]).collect();
        if delta_at_zero {
            ks.push(0);
        }
        ks.sort_unstable();
        ks.dedup();
        ks.into_iter()
            .map(|k| {
                (
                    k,
                    i64::from(delta_at_zero && k == 0) + get(k - 1) + get(k + 1) - 2 * get(k),
                )
            })
            .filter(|&(_, v)| v != 0)
            .collect::<BTreeMap<_, _>>()
    };
    let g = second_difference(&d, true);
    let g_prime = second_difference(&d_prime, false);
    DiagonalStats {
        d,
        d_prime,
        g,
        g_prime,
    }
}

/// Exponents `p_1, …, p_n`; `p_1 = 0`, and `p_r = 1 − g_k(U)` or `1 − g′_k(U)`
/// for an addition or removal on diagonal `k`, with `U` the length-`(r−1)` prefix.
pub fn exponents(t: &UpdownTableau) -> Vec<i64> {
    let mut out = vec![0];
    for r in 2..=t.n() {
        let stats = diagonal_stats(&t.prefix(r - 1).expect("r − 1 ≥ 1"));
        let s = t.step(r);
        let k = s.cell.diagonal();
        out.push(
            1 - if s.added {
                stats.g(k)
            } else {
                stats.g_prime(k)
            },
        );
    }
    out
}

/// Which prefactor to use for the removal case of ψ(U, T).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RemovalPrefactor {
    /// `(4k + 6ω − 4)/(2k + ω − 2)`.
    SixOmega,
    /// `(4k + 3ω − 4)/(2k + ω − 2)`, the value matched by direct evaluation.
    ThreeOmega,
}

fn lin(a: BigRational, b: i64) -> OmegaRatFunc {
    OmegaRatFunc::linear(a, int(b))
}

/// Factor `ψ(U, T)` of the step into `Λ_r`.
pub fn psi(t: &UpdownTableau, r: usize, variant: RemovalPrefactor) -> Result<OmegaRatFunc> {
    let stats = diagonal_stats(&t.prefix(r - 1)?);
    let s = t.step(r);
    let k = s.cell.diagonal();
    let mut acc;
    if s.added {
        // (4k+ω)/(2k+ω) · Π_{k'≠k} (k−k')^{g_k'} · Π_{k'} (k+k'+ω−1)^{g′_k'}
        acc = &lin(int(1), 4 * k) / &lin(int(1), 2 * k);
        for (&kp, &e) in &stats.g {
            if kp != k {
                acc = &acc * &OmegaRatFunc::from_int(k - kp).pow(e as i32)?;
            }
        }
        for (&kp, &e) in &stats.g_prime {
            acc = &acc * &lin(int(1), k + kp - 1).pow(e as i32)?;
        }
    } else {
        // (4k+cω−4)/(2k+ω−2) · Π_{k'≠k} (k'−k)^{g′_k'} · Π_{k'} (−k−k'−ω+1)^{g_k'}
        let top = match variant {
            RemovalPrefactor::SixOmega => lin(int(6), 4 * k - 4),
            RemovalPrefactor::ThreeOmega => lin(int(3), 4 * k - 4),
        };
        acc = &top / &lin(int(1), 2 * k - 2);
        for (&kp, &e) in &stats.g_prime {
            if kp != k {
                acc = &acc * &OmegaRatFunc::from_int(kp - k).pow(e as i32)?;
            }
        }
        for (&kp, &e) in &stats.g {
            acc = &acc * &lin(int(-1), 1 - k - kp).pow(e as i32)?;
        }
    }
    Ok(acc)
}

/// `h(T) = Π_{r≥2} ψ(prefix_{r−1}, step_r)`, with `h = 1` for `n = 1`.
pub fn h_constant(t: &UpdownTableau, variant: RemovalPrefactor) -> Result<OmegaRatFunc> {
    let mut h = OmegaRatFunc::one();
    for r in 2..=t.n() {
        h = &h * &psi(t, r, variant)?;
    }
    Ok(h)
}

/// Fusion constant of a standard tableau of shape `λ ⊢ n`:
/// `2ⁿ C_λ(ω/4) H(λ) / C_λ(ω/2)`.
pub fn standard_fusion_constant(lambda: &Partition) -> OmegaRatFunc {
    let quarter = OmegaRatFunc::linear(rat(1, 4), int(0));
    let half = OmegaRatFunc::linear(rat(1, 2), int(0));
    let pow2 = BigInt::from(2).pow(lambda.size() as u32);
    let k = BigRational::from_integer(pow2 * lambda.hook_product());
    let c = &lambda.content_polynomial(&quarter) / &lambda.content_polynomial(&half);
    c.scale(&k)
}

/// Everything derived from a tableau in one record.
#[derive(Clone, Debug, Serialize)]
pub struct TableauStats {
    pub tableau: UpdownTableau,
    pub contents: Vec<OmegaRatFunc>,
    pub exponents: Vec<i64>,
    pub h: OmegaRatFunc,
    pub h_three_omega: OmegaRatFunc,
    /// `steps[r−2]` holds the statistics of the prefix preceding step `r`.
    pub steps: Vec<DiagonalStats>,
}

impl TableauStats {
    pub fn compute(t: &UpdownTableau) -> Result<Self> {
        let steps = (1..t.n())
            .map(|r| t.prefix(r).map(|u| diagonal_stats(&u)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            tableau: t.clone(),
            contents: t.contents(),
            exponents: exponents(t),
            h: h_constant(t, RemovalPrefactor::SixOmega)?,
            h_three_omega: h_constant(t, RemovalPrefactor::ThreeOmega)?,
            steps,
        })
    }
}
