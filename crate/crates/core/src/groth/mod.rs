//! Grothendieck classes of the building blocks, as polynomials in `q = L`.
//!
//! Empty products are 1 throughout: `[GL_0] = [G(0, n)] = [U(0, n)] = 1` and
//! the Levi factor of an empty composition is a point.

mod partition;

pub use partition::{binomial, partitions_of, Composition, DecreasingTuples, PartitionTail};

use crate::error::{Error, Result};
use crate::exactalg::LaurentPoly;

/// Which of the two formulas for the Gaussian binomial to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GaussMethod {
    /// `∏_{j=1}^{d} (q^{j+n-d} - 1) / (q^j - 1)`
    Product,
    /// `Σ_{0 ≤ λ_1 ≤ ... ≤ λ_d ≤ n-d} q^{λ_1 + ... + λ_d}`
    PartitionSum,
}

/// `[GL_d] = q^{d(d-1)/2} (q^d - 1) ⋯ (q - 1)`.
pub fn class_gl(d: u32) -> LaurentPoly {
    let tri = d as i64 * (d as i64 - 1) / 2;
    (1..=d as i64)
        .map(LaurentPoly::q_pow_minus_one)
        .product::<LaurentPoly>()
        .shift(tri)
}

/// Class of the Grassmannian of `d`-planes in an `n`-dimensional space.
pub fn gauss_binomial(d: u32, n: u32, method: GaussMethod) -> Result<LaurentPoly> {
    if d > n {
        return Err(Error::InvalidDimension { d, n });
    }
    Ok(match method {
        GaussMethod::Product => gauss_product(d, n),
        GaussMethod::PartitionSum => gauss_partition_sum(d, n),
    })
}

/// Shorthand for the product method with a checked dimension.
pub fn gauss(d: u32, n: u32) -> LaurentPoly {
    gauss_binomial(d, n, GaussMethod::Product).expect("d <= n")
}

fn gauss_product(d: u32, n: u32) -> LaurentPoly {
    // The partial product up to j is itself G(j, n - d + j), so each division
    // is exact.
    let mut acc = LaurentPoly::one();
    for j in 1..=d as i64 {
        acc = (&acc * &LaurentPoly::q_pow_minus_one(j + (n - d) as i64))
            .div_exact(&LaurentPoly::q_pow_minus_one(j))
            .expect("partial Gaussian products are polynomials");
    }
    acc
}

fn gauss_partition_sum(d: u32, n: u32) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for lambda in DecreasingTuples::new(d as usize, n - d) {
        let weight: u32 = lambda.iter().sum();
        out.add_term(weight as i64, num_traits::One::one());
    }
    out
}

/// `[U(d, n)]`: ordered `d`-tuples of linearly independent vectors in an
/// `n`-dimensional space, `(q^n - q^{d-1}) ⋯ (q^n - 1)`.
pub fn class_independent_tuples(d: u32, n: u32) -> Result<LaurentPoly> {
    if d > n {
        return Err(Error::InvalidDimension { d, n });
    }
    let top = LaurentPoly::q_pow(n as i64);
    Ok((0..d as i64)
        .map(|i| &top - &LaurentPoly::q_pow(i))
        .product())
}

/// `[GL_r / P] = ∏_j [G(i_j - i_{j-1}, i_j)]` for the cumulative list
/// `i_0 < i_1 < ... < i_l = r`.
pub fn class_flag_quotient(r: u32, cumulative: &[u32]) -> Result<LaurentPoly> {
    let malformed = || Error::MalformedCumulativeList {
        rank: r,
        list: cumulative.to_vec(),
    };
    if cumulative.last() != Some(&r) || cumulative.windows(2).any(|w| w[0] >= w[1]) {
        return Err(malformed());
    }
    Ok(cumulative
        .windows(2)
        .map(|w| gauss(w[1] - w[0], w[1]))
        .product())
}

/// `∏ [GL_{a_i}]` over the blocks.
pub fn class_levi(blocks: &Composition) -> LaurentPoly {
    blocks.blocks().iter().map(|&a| class_gl(a)).product()
}

/// Class of `r × s` matrices of rank exactly `j`, viewed as maps
/// `C^r → C^s`: kernel in `G(r - j, r)`, fiber `U(j, s)`.
pub fn rank_stratum_class(r: u32, s: u32, j: u32) -> Result<LaurentPoly> {
    if j > r.min(s) {
        return Err(Error::InvalidRank { r, s, j });
    }
    Ok(&gauss(r - j, r) * &class_independent_tuples(j, s)?)
}

/// `q^{kr} = 1 + Σ_{m=r-k}^{r-1} [G(m, r)] [U(r - m, k)]`, checked exactly.
pub fn rank_identity_check(r: u32, k: u32) -> bool {
    if k == 0 || k > r {
        return false;
    }
    let rhs = LaurentPoly::one()
        + ((r - k)..r)
            .map(|m| &gauss(m, r) * &class_independent_tuples(r - m, k).expect("r - m <= k"))
            .sum::<LaurentPoly>();
    rhs == LaurentPoly::q_pow((k * r) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    fn q(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(c)
    }

    fn at(p: &LaurentPoly, x: i64) -> i64 {
        p.eval(&int(x)).unwrap().to_integer().try_into().unwrap()
    }

    #[test]
    fn general_linear_group() {
        assert_eq!(class_gl(0), LaurentPoly::one());
        assert_eq!(class_gl(1), q(&[-1, 1]));
        assert_eq!(at(&class_gl(2), 2), 6);
        assert_eq!(at(&class_gl(3), 2), 168);
    }

    #[test]
    fn gaussian_binomials() {
        for r in 1..6 {
            assert_eq!(gauss(1, r), LaurentPoly::geometric(r));
        }
        let g24 = q(&[1, 1, 2, 1, 1]);
        assert_eq!(gauss(2, 4), g24);
        assert_eq!(
            gauss_binomial(2, 4, GaussMethod::PartitionSum).unwrap(),
            g24
        );
        assert_eq!(at(&g24, 2), 35);
        assert_eq!(gauss(2, 3), q(&[1, 1, 1]));
        assert_eq!(gauss(0, 0), LaurentPoly::one());
        assert_eq!(
            gauss_binomial(3, 2, GaussMethod::Product),
            Err(Error::InvalidDimension { d: 3, n: 2 })
        );
        assert!(gauss_binomial(3, 2, GaussMethod::PartitionSum).is_err());
    }

    #[test]
    fn independent_tuples() {
        for n in 1..5 {
            assert_eq!(
                class_independent_tuples(1, n).unwrap(),
                LaurentPoly::q_pow_minus_one(n as i64)
            );
        }
        let u22 = &q(&[0, -1, 1]) * &q(&[-1, 0, 1]);
        assert_eq!(class_independent_tuples(2, 2).unwrap(), u22);
        assert_eq!(u22, class_gl(2));
        assert_eq!(at(&class_independent_tuples(2, 3).unwrap(), 2), 42);
        assert!(class_independent_tuples(3, 2).is_err());
        assert_eq!(class_independent_tuples(0, 3).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn flag_quotients() {
        assert_eq!(class_flag_quotient(2, &[1, 2]).unwrap(), q(&[1, 1]));
        assert_eq!(class_flag_quotient(4, &[0, 4]).unwrap(), LaurentPoly::one());
        // lines in F_2^2, then full flags in F_2^3: 3 and 3 * 7
        assert_eq!(at(&class_flag_quotient(2, &[0, 1, 2]).unwrap(), 2), 3);
        assert_eq!(at(&class_flag_quotient(3, &[0, 1, 2, 3]).unwrap(), 2), 21);
        assert_eq!(class_flag_quotient(3, &[3]).unwrap(), LaurentPoly::one());
        assert!(class_flag_quotient(3, &[0, 2]).is_err());
        assert!(class_flag_quotient(3, &[0, 2, 2, 3]).is_err());
        assert!(class_flag_quotient(3, &[]).is_err());
    }

    #[test]
    fn levi_factors() {
        let c = |b: &[u32]| Composition::new(b.to_vec()).unwrap();
        assert_eq!(class_levi(&c(&[1])), q(&[-1, 1]));
        assert_eq!(class_levi(&c(&[1, 1])), q(&[-1, 1]).pow(2));
        assert_eq!(at(&class_levi(&c(&[2, 1])), 2), 6);
        assert_eq!(class_levi(&c(&[])), LaurentPoly::one());
    }

    #[test]
    fn rank_strata() {
        assert_eq!(rank_stratum_class(3, 4, 0).unwrap(), LaurentPoly::one());
        assert_eq!(at(&rank_stratum_class(2, 2, 1).unwrap(), 2), 9);
        assert_eq!(rank_stratum_class(2, 2, 2).unwrap(), class_gl(2));
        assert_eq!(
            rank_stratum_class(2, 3, 3),
            Err(Error::InvalidRank { r: 2, s: 3, j: 3 })
        );
    }

    #[test]
    fn rank_identity() {
        assert!(rank_identity_check(2, 2));
        for r in 1..8 {
            assert!(rank_identity_check(r, 1));
        }
        assert!(rank_identity_check(5, 3));
        assert!(!rank_identity_check(3, 0));
        assert!(!rank_identity_check(3, 4));
    }
}
