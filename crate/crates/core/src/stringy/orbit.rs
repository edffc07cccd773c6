//! Orbit sums over partition tails.
//!
//! The arc space of `D^k` splits into orbits `C_λ` indexed by
//! `λ = (∞, ..., ∞, λ_{r-k+1}, ..., λ_r)`. Summing the measures with the
//! canonical weight over all tails bounded by `N` gives a Laurent polynomial
//! whose coefficients stabilize to the closed form as `N` grows.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exactalg::LaurentPoly;
use crate::groth::{class_flag_quotient, class_levi, DecreasingTuples, PartitionTail};

use super::{
    check_affine, check_positive_k, stringy_affine_closed, stringy_projective_closed, subset_terms,
    Variety,
};

/// `μ(C_λ) = [GL_r / P_{λ'}]² [L_{λ''}] q^{-Σ (2i-1) λ_i}`, `i` over the tail
/// positions `r-k+1, ..., r`.
pub fn orbit_measure(tail: &PartitionTail) -> LaurentPoly {
    let (blocks, cumulative) = tail.composition();
    let flag = class_flag_quotient(tail.r(), &cumulative).expect("tail cumulative list is valid");
    let exponent: i64 = tail
        .indexed()
        .map(|(i, lambda)| -((2 * i as i64 - 1) * lambda as i64))
        .sum();
    (&flag.pow(2) * &class_levi(&blocks)).shift(exponent)
}

fn tails(r: u32, k: u32, cap: u32, variety: Variety) -> impl Iterator<Item = PartitionTail> {
    DecreasingTuples::new(k as usize, cap)
        .filter(move |t| variety == Variety::Affine || t.last() == Some(&0))
        .map(move |t| PartitionTail::new(r, k, t).expect("enumerated tails are valid"))
}

/// `Σ μ(C_λ) q^{(r-k) Σ λ_i}` over tails with entries `≤ cap`; projective
/// tails have `λ_r = 0`. The projective `1/(q - 1)` factor is left to the
/// caller, so the partial sums stay Laurent polynomials.
pub fn truncated_orbit_sum(r: u32, k: u32, cap: u32, variety: Variety) -> Result<LaurentPoly> {
    match variety {
        Variety::Affine => check_affine(r, k)?,
        Variety::Projective => check_positive_k(r, k)?,
    }
    Ok(tails(r, k, cap, variety)
        .map(|t| orbit_measure(&t).shift((r - k) as i64 * t.sum() as i64))
        .sum())
}

/// Upper bound on every exponent contributed by tails left out of
/// [`truncated_orbit_sum`] at this cap; `None` when nothing is left out.
///
/// An omitted tail has `λ_{r-k+1} = Σ b_i ≥ cap + 1`, and each unit of `b_i`
/// lowers the exponent by `i (i - r + k) ≥ r - k + 1`; the class coefficient
/// of any chain has degree at most the maximum over all subsets.
pub fn orbit_tail_bound(r: u32, k: u32, cap: u32, variety: Variety) -> Option<i64> {
    if k == 0 || (variety == Variety::Projective && k == 1) {
        return None;
    }
    let max_class_degree = subset_terms(r, k)
        .iter()
        .filter_map(|t| t.class.degree())
        .max()
        .expect("at least one subset");
    Some(max_class_degree - (r - k + 1) as i64 * (cap as i64 + 1))
}

/// Coefficient-wise comparison of a truncated orbit sum against its limit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitConvergence {
    pub r: u32,
    pub k: u32,
    pub cap: u32,
    pub variety: Variety,
    /// Exponents above this were compared; `None` means all were.
    pub bound: Option<i64>,
    /// Compared exponents whose coefficients agree.
    pub matched: Vec<i64>,
    /// Compared exponents whose coefficients differ.
    pub mismatched: Vec<i64>,
    /// Exponents at or below the bound, not compared.
    pub flagged: Vec<i64>,
}

impl OrbitConvergence {
    pub fn is_consistent(&self) -> bool {
        self.mismatched.is_empty()
    }

    /// No exponent `≥ 0` was left uncompared.
    pub fn nonnegative_part_settled(&self) -> bool {
        self.flagged.iter().all(|&e| e < 0)
    }
}

/// The limit of [`truncated_orbit_sum`]: the closed form for `D^k`, and
/// `(q - 1)` times the closed form for `D̂^k`.
pub fn orbit_limit(r: u32, k: u32, variety: Variety) -> Result<LaurentPoly> {
    Ok(match variety {
        Variety::Affine => stringy_affine_closed(r, k)?,
        Variety::Projective => &stringy_projective_closed(r, k)? * &LaurentPoly::q_pow_minus_one(1),
    })
}

pub fn orbit_convergence(r: u32, k: u32, cap: u32, variety: Variety) -> Result<OrbitConvergence> {
    let partial = truncated_orbit_sum(r, k, cap, variety)?;
    let limit = orbit_limit(r, k, variety)?;
    let bound = orbit_tail_bound(r, k, cap, variety);
    let mut exps: Vec<i64> = partial.exponents().chain(limit.exponents()).collect();
    exps.sort_unstable();
    exps.dedup();
    let mut out = OrbitConvergence {
        r,
        k,
        cap,
        variety,
        bound,
        matched: Vec::new(),
        mismatched: Vec::new(),
        flagged: Vec::new(),
    };
    for e in exps {
        if bound.is_some_and(|b| e <= b) {
            out.flagged.push(e);
        } else if partial.coeff(e) == limit.coeff(e) {
            out.matched.push(e);
        } else {
            out.mismatched.push(e);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groth::{class_gl, gauss};

    fn q(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(c)
    }

    fn base_r2() -> LaurentPoly {
        &q(&[1, 1]).pow(2) * &q(&[-1, 1])
    }

    #[test]
    fn measures_for_r2_k1() {
        assert_eq!(orbit_measure(&PartitionTail::zero(2, 1)), base_r2());
        for m in 1..5 {
            let t = PartitionTail::new(2, 1, vec![m]).unwrap();
            assert_eq!(orbit_measure(&t), base_r2().shift(-3 * m as i64));
        }
    }

    #[test]
    fn zero_tail_measure() {
        for r in 1..6 {
            for k in 0..=r {
                let expected = &gauss(k, r).pow(2) * &class_gl(k);
                assert_eq!(orbit_measure(&PartitionTail::zero(r, k)), expected);
            }
        }
    }

    #[test]
    fn truncated_sum_r2_k1_is_geometric() {
        for n in 0..8u32 {
            let expected: LaurentPoly = (0..=n as i64).map(|m| base_r2().shift(-2 * m)).sum();
            let got = truncated_orbit_sum(2, 1, n, Variety::Affine).unwrap();
            assert_eq!(got, expected);
            let diff = &q(&[0, 0, 1, 1]) - &got;
            assert!(diff.degree().unwrap() <= 3 - 2 * n as i64);
            // derived bound is at least as strong as the hand one
            let b = orbit_tail_bound(2, 1, n, Variety::Affine).unwrap();
            assert!(diff.degree().unwrap() <= b);
        }
    }

    #[test]
    fn cap_zero_keeps_only_zero_tail() {
        for r in 2..5 {
            for k in 1..r {
                assert_eq!(
                    truncated_orbit_sum(r, k, 0, Variety::Affine).unwrap(),
                    &gauss(k, r).pow(2) * &class_gl(k)
                );
            }
        }
    }

    #[test]
    fn r3_k2_stabilizes() {
        let c = orbit_convergence(3, 2, 8, Variety::Affine).unwrap();
        assert!(c.is_consistent());
        assert!(c.nonnegative_part_settled());
        for e in 6..=8 {
            assert!(c.matched.contains(&e));
        }
    }

    #[test]
    fn projective_k1_is_exact_at_once() {
        let c = orbit_convergence(3, 1, 0, Variety::Projective).unwrap();
        assert_eq!(c.bound, None);
        assert!(c.is_consistent() && c.flagged.is_empty());
    }

    #[test]
    fn projective_stabilizes() {
        for (r, k) in [(3, 2), (4, 2), (4, 3)] {
            let c = orbit_convergence(r, k, 10, Variety::Projective).unwrap();
            assert!(c.is_consistent(), "{c:?}");
            assert!(c.nonnegative_part_settled());
        }
    }

    #[test]
    fn k_zero_is_a_point() {
        assert_eq!(
            truncated_orbit_sum(3, 0, 5, Variety::Affine).unwrap(),
            LaurentPoly::one()
        );
        assert_eq!(orbit_tail_bound(3, 0, 5, Variety::Affine), None);
    }
}
