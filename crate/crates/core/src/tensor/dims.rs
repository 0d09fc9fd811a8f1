//! Dimensions of irreducible representations of GL_N, O_N and Sp_N labelled
//! by partitions, by the Weyl dimension formula.

use num_traits::{One, Zero};

use crate::scalars::{int, rat, BigRational};
use crate::tableau::Partition;

/// Hook-content formula: `Π (N + c(□)) / h(□)`.
pub fn gl_dimension(n: usize, lambda: &Partition) -> BigRational {
    let hooks = lambda.hook_product();
    let contents = lambda.cells().fold(BigRational::one(), |acc, c| {
        acc * int(n as i64 + c.col as i64 - c.row as i64)
    });
    contents / BigRational::from_integer(hooks)
}

/// Weyl's formula over the positive roots `e_i ± e_j` plus `c · e_i`
/// (`c = 1` for type B, `2` for type C, absent for type D).
fn weyl(l: &[BigRational], rho: &[BigRational], short: Option<i64>) -> BigRational {
    let mut num = BigRational::one();
    let mut den = BigRational::one();
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            num *= (&l[i] - &l[j]) * (&l[i] + &l[j]);
            den *= (&rho[i] - &rho[j]) * (&rho[i] + &rho[j]);
        }
        if let Some(c) = short {
            num *= &l[i] * int(c);
            den *= &rho[i] * int(c);
        }
    }
    num / den
}

fn padded(lambda: &Partition, r: usize) -> Option<Vec<i64>> {
    let parts = lambda.parts();
    if parts.len() > r {
        return None;
    }
    let mut v: Vec<i64> = parts.iter().map(|&p| p as i64).collect();
    v.resize(r, 0);
    Some(v)
}

/// `dim L(λ)` for Sp_N (`N` even); zero when `λ` has more than `N/2` rows.
pub fn sp_dimension(n: usize, lambda: &Partition) -> BigRational {
    let r = n / 2;
    let Some(v) = padded(lambda, r) else {
        return BigRational::zero();
    };
    let rho: Vec<BigRational> = (0..r).map(|i| int((r - i) as i64)).collect();
    let l: Vec<BigRational> = v.iter().zip(&rho).map(|(x, p)| int(*x) + p).collect();
    weyl(&l, &rho, Some(2))
}

/// `dim L(λ)` for O_N; zero unless the first two columns hold at most `N` boxes.
pub fn o_dimension(n: usize, lambda: &Partition) -> BigRational {
    let c1 = lambda.column_length(1);
    let c2 = lambda.column_length(2);
    if c1 + c2 > n {
        return BigRational::zero();
    }
    let r = n / 2;
    // λ and its associate (first column replaced by N − c1) have equal dimension
    let lambda = if c1 > r {
        let mut cols: Vec<usize> = (1..=lambda.parts().first().copied().unwrap_or(0))
            .map(|j| lambda.column_length(j))
            .collect();
        cols[0] = n - c1;
        let parts: Vec<usize> = (1..=cols[0].max(c2))
            .map(|i| cols.iter().filter(|&&c| c >= i).count())
            .filter(|&p| p > 0)
            .collect();
        Partition::new(parts).expect("conjugate of a partition")
    } else {
        lambda.clone()
    };
    let v = padded(&lambda, r).expect("at most N/2 rows");
    if n % 2 == 1 {
        let rho: Vec<BigRational> = (0..r).map(|i| rat(2 * (r - i) as i64 - 1, 2)).collect();
        let l: Vec<BigRational> = v.iter().zip(&rho).map(|(x, p)| int(*x) + p).collect();
        weyl(&l, &rho, Some(1))
    } else {
        let rho: Vec<BigRational> = (0..r).map(|i| int((r - 1 - i) as i64)).collect();
        let l: Vec<BigRational> = v.iter().zip(&rho).map(|(x, p)| int(*x) + p).collect();
        let d = weyl(&l, &rho, None);
        // O_{2r} joins the two SO_{2r} modules λ and its mirror when λ_r > 0
        if r > 0 && v[r - 1] > 0 {
            d * int(2)
        } else {
            d
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn gl_examples() {
        assert_eq!(gl_dimension(3, &p(&[2])), int(6));
        assert_eq!(gl_dimension(3, &p(&[1, 1])), int(3));
        assert_eq!(gl_dimension(3, &p(&[2, 1])), int(8));
        assert_eq!(gl_dimension(2, &p(&[1, 1, 1])), int(0));
    }

    #[test]
    fn orthogonal_examples() {
        // vector, traceless symmetric square, exterior square
        for n in 3..=8 {
            let nn = n as i64;
            assert_eq!(o_dimension(n, &p(&[1])), int(nn));
            assert_eq!(o_dimension(n, &p(&[2])), int(nn * (nn + 1) / 2 - 1));
            assert_eq!(o_dimension(n, &p(&[1, 1])), int(nn * (nn - 1) / 2));
            assert_eq!(o_dimension(n, &p(&[])), int(1));
        }
        // harmonic cubics in 7 variables
        assert_eq!(o_dimension(7, &p(&[3])), int(77));
        assert_eq!(o_dimension(7, &p(&[1, 1, 1])), int(35));
        // O_5 exterior cube is the associate of the exterior square
        assert_eq!(o_dimension(5, &p(&[1, 1, 1])), int(10));
        assert_eq!(o_dimension(4, &p(&[1, 1])), int(6));
        assert_eq!(o_dimension(3, &p(&[2, 2])), int(0));
    }

    #[test]
    fn symplectic_examples() {
        for n in [4usize, 6, 8] {
            let nn = n as i64;
            assert_eq!(sp_dimension(n, &p(&[1])), int(nn));
            assert_eq!(sp_dimension(n, &p(&[2])), int(nn * (nn + 1) / 2));
            assert_eq!(sp_dimension(n, &p(&[1, 1])), int(nn * (nn - 1) / 2 - 1));
        }
        assert_eq!(sp_dimension(4, &p(&[1, 1, 1])), int(0));
        assert_eq!(sp_dimension(6, &p(&[1, 1, 1])), int(14));
    }

    #[test]
    fn tensor_square_decompositions() {
        // (C^N)^{⊗2} = sum over the three shapes, each with multiplicity one
        for n in 3..=7 {
            let total =
                o_dimension(n, &p(&[2])) + o_dimension(n, &p(&[1, 1])) + o_dimension(n, &p(&[]));
            assert_eq!(total, int((n * n) as i64));
        }
    }
}
