//! Stringy invariants of `D^k ⊂ C^{r×r}` and of its projectivization `D̂^k`.
//!
//! Each invariant is available through more than one route:
//!
//! * subset sums over `I ⊂ {r-k+1, ..., r-1}`, reduced over a common
//!   denominator ([`stringy_affine_sum`], [`stringy_projective_sum`]),
//! * closed forms `q^{kr} [G(k, r)]` and `[kr]_q [G(k, r)]`,
//! * the recursion over the second-to-last cumulative index
//!   ([`a_recursive`]),
//! * truncated orbit sums over partition tails ([`orbit`]),
//! * the blowup resolution for `k = 1` ([`resolution`]).
//!
//! [`zeta`] holds the motivic zeta function of the determinant.

pub mod orbit;
pub mod resolution;
pub mod zeta;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{int, Coeff, LaurentPoly, RationalFn};
use crate::groth::{binomial, class_gl, gauss};

pub use orbit::{
    orbit_convergence, orbit_limit, orbit_measure, orbit_tail_bound, truncated_orbit_sum,
    OrbitConvergence,
};
pub use resolution::{
    k1_resolution_check, k1_resolution_data, stringy_from_resolution, ResolutionData, Stratum,
};
pub use zeta::{zeta_closed_expansion, zeta_coefficient_direct, zeta_direct_series, ZetaSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variety {
    /// `D^k` itself.
    Affine,
    /// `D̂^k ⊂ P^{r²-1}`.
    Projective,
}

impl fmt::Display for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variety::Affine => "affine",
            Variety::Projective => "projective",
        })
    }
}

impl FromStr for Variety {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "affine" => Ok(Variety::Affine),
            "projective" => Ok(Variety::Projective),
            other => Err(Error::InvalidInput(format!("unknown variety {other:?}"))),
        }
    }
}

/// A validated `(r, k, variety)` triple: `r ≥ 1`, `0 ≤ k ≤ r - 1`, and
/// `k ≥ 1` for the projective case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StringyInput {
    r: u32,
    k: u32,
    variety: Variety,
}

impl StringyInput {
    pub fn new(r: u32, k: u32, variety: Variety) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidInput(
                "matrix size r must be at least 1".into(),
            ));
        }
        if k >= r {
            return Err(Error::InvalidInput(format!(
                "rank bound k = {k} must be below r = {r}"
            )));
        }
        if variety == Variety::Projective && k == 0 {
            return Err(Error::InvalidInput(
                "the projectivization needs k >= 1".into(),
            ));
        }
        Ok(Self { r, k, variety })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn variety(&self) -> Variety {
        self.variety
    }

    /// `k(2r - k)`, minus one for the projectivization.
    pub fn dimension(&self) -> u64 {
        let d = self.k as u64 * (2 * self.r as u64 - self.k as u64);
        match self.variety {
            Variety::Affine => d,
            Variety::Projective => d - 1,
        }
    }

    /// `C(r, k)` or `kr · C(r, k)`.
    pub fn expected_euler(&self) -> BigInt {
        let c = BigInt::from(binomial(self.r as u64, self.k as u64));
        match self.variety {
            Variety::Affine => c,
            Variety::Projective => c * (self.k as u64 * self.r as u64),
        }
    }

    pub fn closed_form(&self) -> LaurentPoly {
        match self.variety {
            Variety::Affine => stringy_affine_closed(self.r, self.k).expect("validated"),
            Variety::Projective => stringy_projective_closed(self.r, self.k).expect("validated"),
        }
    }

    pub fn subset_sum(&self) -> Result<LaurentPoly> {
        match self.variety {
            Variety::Affine => stringy_affine_sum(self.r, self.k),
            Variety::Projective => stringy_projective_sum(self.r, self.k),
        }
    }
}

fn check_affine(r: u32, k: u32) -> Result<()> {
    StringyInput::new(r, k, Variety::Affine).map(|_| ())
}

fn check_positive_k(r: u32, k: u32) -> Result<()> {
    StringyInput::new(r, k, Variety::Projective).map(|_| ())
}

/// Log discrepancies `a_i = (k - i)(r - i)` of the exceptional divisors,
/// `i = 0, ..., k-1`.
pub fn log_discrepancies(r: u32, k: u32) -> Result<Vec<(u32, u32)>> {
    check_positive_k(r, k)?;
    Ok((0..k).map(|i| (i, (k - i) * (r - i))).collect())
}

/// Coefficients `(k - i)(r - i) - 1` of the relative canonical divisor.
pub fn relative_canonical_coeffs(r: u32, k: u32) -> Result<Vec<u32>> {
    Ok(log_discrepancies(r, k)?
        .into_iter()
        .map(|(_, a)| a - 1)
        .collect())
}

/// One summand of the subset sum: the chain `i_0 < i_1 < ... < i_l = r`
/// with `{i_1, ..., i_l} = I^c_r`, its class coefficient
/// `∏ [GL_{d}] [G(d, i_j)]²` with `d = i_j - i_{j-1}`, and the geometric
/// weights `i_j (i_j - r + k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetTerm {
    pub cumulative: Vec<u32>,
    pub class: LaurentPoly,
    pub weights: Vec<i64>,
}

impl SubsetTerm {
    /// `class / ∏ (q^{w} - 1)`.
    pub fn rational(&self) -> RationalFn {
        let den: LaurentPoly = self
            .weights
            .iter()
            .map(|&w| LaurentPoly::q_pow_minus_one(w))
            .product();
        RationalFn::new(self.class.clone(), den).expect("weights are positive")
    }
}

/// Summands for all `I ⊂ {r-k+1, ..., r-1}`, enumerated by bitmask over
/// `k - 1` bits (bit `b` stands for `r - k + 1 + b ∈ I`). `i_0 = r - k`, so
/// `k = r` gives the chains used by the zeta function.
pub fn subset_terms(r: u32, k: u32) -> Vec<SubsetTerm> {
    assert!(1 <= k && k <= r, "subset terms need 1 <= k <= r");
    let base = r - k;
    let inner = k - 1;
    (0u64..1u64 << inner)
        .map(|mask| {
            let mut cumulative = vec![base];
            cumulative.extend(
                (0..inner)
                    .filter(|b| mask >> b & 1 == 0)
                    .map(|b| base + 1 + b),
            );
            cumulative.push(r);
            let class = cumulative
                .windows(2)
                .map(|w| {
                    let d = w[1] - w[0];
                    &class_gl(d) * &gauss(d, w[1]).pow(2)
                })
                .product();
            let weights = cumulative[1..]
                .iter()
                .map(|&i| i as i64 * (i as i64 - base as i64))
                .collect();
            SubsetTerm {
                cumulative,
                class,
                weights,
            }
        })
        .collect()
}

/// `scale · Σ_I term_I / extra_den`, assembled over the common denominator
/// `extra_den · ∏_w (q^w - 1)` (distinct weights `w`) and divided once.
fn subset_sum_poly(
    r: u32,
    k: u32,
    scale: &LaurentPoly,
    extra_den: &LaurentPoly,
) -> Result<LaurentPoly> {
    let terms = subset_terms(r, k);
    let weights: BTreeSet<i64> = terms
        .iter()
        .flat_map(|t| t.weights.iter().copied())
        .collect();
    let num: LaurentPoly = terms
        .iter()
        .map(|t| {
            let cofactor: LaurentPoly = weights
                .iter()
                .filter(|w| !t.weights.contains(w))
                .map(|&w| LaurentPoly::q_pow_minus_one(w))
                .product();
            &t.class * &cofactor
        })
        .sum();
    let num = &num * scale;
    let den = extra_den
        * &weights
            .iter()
            .map(|&w| LaurentPoly::q_pow_minus_one(w))
            .product();
    match num.div_exact(&den) {
        Some(p) => Ok(p),
        None => RationalFn::new(num, den)?.into_poly(),
    }
}

/// `A(k, r) = Σ_I ∏_{i ∈ I^c_r} [GL_{d(I,i)}] [G(d(I,i), i)]² / (q^{i(i-r+k)} - 1)`.
pub fn a_subset_sum(r: u32, k: u32) -> Result<LaurentPoly> {
    check_positive_k(r, k)?;
    subset_sum_poly(r, k, &LaurentPoly::one(), &LaurentPoly::one())
}

/// `A(k, r)` through the recursion on the second-to-last index `m`:
///
/// `A(k, r) = (Σ_{m=r-k+1}^{r-1} A(k+m-r, m) X_m + X_{r-k}) / (q^{kr} - 1)`
///
/// where `X_m = q^{(r-m)(r-m-1)/2} ∏_{j=m+1}^{r} (q^j - 1)² / ∏_{j=1}^{r-m} (q^j - 1)`.
/// The base cases are `A(0, ·) = 1` and `A(1, r) = 1 + q + ... + q^{r-1}`.
pub fn a_recursive(r: u32, k: u32) -> Result<LaurentPoly> {
    check_positive_k(r, k)?;
    let mut memo = HashMap::new();
    a_rec(k, r, &mut memo)
}

fn a_rec(k: u32, r: u32, memo: &mut HashMap<(u32, u32), LaurentPoly>) -> Result<LaurentPoly> {
    if k == 0 {
        return Ok(LaurentPoly::one());
    }
    if k == 1 {
        return Ok(LaurentPoly::geometric(r));
    }
    if let Some(v) = memo.get(&(k, r)) {
        return Ok(v.clone());
    }
    let block = |m: u32| -> RationalFn {
        let d = r - m;
        let num: LaurentPoly = ((m + 1)..=r)
            .map(|j| LaurentPoly::q_pow_minus_one(j as i64).pow(2))
            .product::<LaurentPoly>()
            .shift(d as i64 * (d as i64 - 1) / 2);
        let den: LaurentPoly = (1..=d)
            .map(|j| LaurentPoly::q_pow_minus_one(j as i64))
            .product();
        RationalFn::new(num, den).expect("nonzero denominator")
    };
    let mut total = block(r - k);
    for m in (r - k + 1)..r {
        let inner = a_rec(k + m - r, m, memo)?;
        total = &total + &block(m).scale_poly(&inner);
    }
    let out = total
        .div(&RationalFn::from_poly(LaurentPoly::q_pow_minus_one(
            (k * r) as i64,
        )))?
        .into_poly()?;
    memo.insert((k, r), out.clone());
    Ok(out)
}

/// `E_st(D^k)` from the subset sum `q^{kr} A(k, r)`.
pub fn stringy_affine_sum(r: u32, k: u32) -> Result<LaurentPoly> {
    check_affine(r, k)?;
    if k == 0 {
        return Ok(LaurentPoly::one());
    }
    subset_sum_poly(
        r,
        k,
        &LaurentPoly::q_pow((k * r) as i64),
        &LaurentPoly::one(),
    )
}

/// `E_st(D^k) = q^{kr} [G(k, r)]`.
pub fn stringy_affine_closed(r: u32, k: u32) -> Result<LaurentPoly> {
    check_affine(r, k)?;
    Ok(gauss(k, r).shift((k * r) as i64))
}

/// `E_st(D̂^k) = (1 + q + ... + q^{kr-1}) [G(k, r)]`.
pub fn stringy_projective_closed(r: u32, k: u32) -> Result<LaurentPoly> {
    check_positive_k(r, k)?;
    Ok(&LaurentPoly::geometric(k * r) * &gauss(k, r))
}

/// `E_st(D̂^k)` from the subset sum with `b_r = 0`:
/// `Σ_I (q^{kr} - 1) ∏ (...) / (q - 1)`.
pub fn stringy_projective_sum(r: u32, k: u32) -> Result<LaurentPoly> {
    check_positive_k(r, k)?;
    subset_sum_poly(
        r,
        k,
        &LaurentPoly::q_pow_minus_one((k * r) as i64),
        &LaurentPoly::q_pow_minus_one(1),
    )
}

/// Diagonal stringy Hodge numbers `h^{p,p}` read off a polynomial in `q = uv`.
///
/// The off-diagonal entries vanish because every class in play is a
/// polynomial in `L`, whose E-polynomial is `uv`; `off_diagonal_zero` records
/// that claim for consumers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeTable {
    pub diag: BTreeMap<u32, BigInt>,
    pub off_diagonal_zero: bool,
}

impl HodgeTable {
    pub fn is_nonnegative(&self) -> bool {
        self.diag
            .values()
            .all(|h| h.sign() != num_bigint::Sign::Minus)
    }

    pub fn get(&self, p: u32) -> BigInt {
        self.diag.get(&p).cloned().unwrap_or_default()
    }
}

pub fn stringy_hodge(p: &LaurentPoly) -> Result<HodgeTable> {
    if let Some(o) = p.order().filter(|&o| o < 0) {
        return Err(Error::NegativeExponent(o));
    }
    let mut diag = BTreeMap::new();
    for (e, c) in p.terms() {
        if !c.is_integer() {
            return Err(Error::NonIntegralCoefficient(e));
        }
        diag.insert(e as u32, c.to_integer());
    }
    Ok(HodgeTable {
        diag,
        off_diagonal_zero: true,
    })
}

/// Value at `q = 1`, the `u, v → 1` limit of a polynomial E-function.
pub fn stringy_euler(p: &LaurentPoly) -> Coeff {
    p.eval(&int(1)).expect("evaluation at 1 never fails")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(c)
    }

    #[test]
    fn discrepancies() {
        assert_eq!(log_discrepancies(3, 2).unwrap(), vec![(0, 6), (1, 2)]);
        for r in 2..8 {
            assert_eq!(log_discrepancies(r, 1).unwrap(), vec![(0, r)]);
            assert_eq!(relative_canonical_coeffs(r, 1).unwrap(), vec![r - 1]);
        }
        assert_eq!(
            log_discrepancies(5, 3).unwrap(),
            vec![(0, 15), (1, 8), (2, 3)]
        );
        assert_eq!(relative_canonical_coeffs(3, 2).unwrap(), vec![5, 1]);
        assert_eq!(relative_canonical_coeffs(4, 3).unwrap(), vec![11, 5, 1]);
        assert!(log_discrepancies(3, 3).is_err());
        assert!(log_discrepancies(3, 0).is_err());
        // canonical: every log discrepancy is at least 2
        for r in 2..10 {
            for k in 1..r {
                assert!(log_discrepancies(r, k)
                    .unwrap()
                    .iter()
                    .all(|&(_, a)| a >= 2));
            }
        }
    }

    #[test]
    fn affine_examples() {
        assert_eq!(stringy_affine_sum(2, 1).unwrap(), q(&[0, 0, 1, 1]));
        for r in 1..5 {
            assert_eq!(stringy_affine_sum(r, 0).unwrap(), LaurentPoly::one());
            assert_eq!(stringy_affine_closed(r, 0).unwrap(), LaurentPoly::one());
        }
        let e32 = q(&[0, 0, 0, 0, 0, 0, 1, 1, 1]);
        assert_eq!(stringy_affine_sum(3, 2).unwrap(), e32);
        assert_eq!(stringy_affine_closed(3, 2).unwrap(), e32);
        assert_eq!(stringy_affine_closed(2, 1).unwrap(), q(&[0, 0, 1, 1]));
        assert_eq!(
            stringy_affine_closed(4, 2).unwrap(),
            q(&[1, 1, 2, 1, 1]).shift(8)
        );
        assert!(stringy_affine_sum(3, 3).is_err());
        assert!(stringy_affine_sum(0, 0).is_err());
    }

    #[test]
    fn recursion_examples() {
        for r in 2..7 {
            assert_eq!(a_recursive(r, 1).unwrap(), gauss(1, r));
            assert_eq!(a_subset_sum(r, 1).unwrap(), gauss(1, r));
        }
        for k in 1..6 {
            assert_eq!(a_subset_sum(k + 1, k).unwrap(), gauss(k, k + 1));
            assert_eq!(a_recursive(k + 1, k).unwrap(), gauss(k, k + 1));
        }
        assert_eq!(a_recursive(4, 2).unwrap(), q(&[1, 1, 2, 1, 1]));
        assert_eq!(a_subset_sum(4, 2).unwrap(), q(&[1, 1, 2, 1, 1]));
    }

    #[test]
    fn projective_examples() {
        assert_eq!(stringy_projective_closed(2, 1).unwrap(), q(&[1, 2, 1]));
        assert_eq!(stringy_projective_sum(2, 1).unwrap(), q(&[1, 2, 1]));
        assert_eq!(
            stringy_projective_closed(3, 1).unwrap(),
            q(&[1, 1, 1]).pow(2)
        );
        let e32 = &LaurentPoly::geometric(6) * &q(&[1, 1, 1]);
        assert_eq!(stringy_projective_closed(3, 2).unwrap(), e32);
        assert_eq!(stringy_projective_sum(3, 2).unwrap(), e32);
        assert!(stringy_projective_sum(3, 0).is_err());
    }

    #[test]
    fn projective_affine_relation() {
        for r in 2..6 {
            for k in 1..r {
                let kr = (k * r) as i64;
                let lhs = &stringy_projective_sum(r, k).unwrap().shift(kr) * &q(&[-1, 1]);
                let rhs = &LaurentPoly::q_pow_minus_one(kr) * &stringy_affine_sum(r, k).unwrap();
                assert_eq!(lhs, rhs, "r = {r}, k = {k}");
            }
        }
    }

    #[test]
    fn hodge_tables() {
        let h = stringy_hodge(&stringy_projective_closed(2, 1).unwrap()).unwrap();
        assert_eq!(h.get(0), 1.into());
        assert_eq!(h.get(1), 2.into());
        assert_eq!(h.get(2), 1.into());
        assert!(h.is_nonnegative() && h.off_diagonal_zero);
        let one = stringy_hodge(&LaurentPoly::one()).unwrap();
        assert_eq!(one.diag.len(), 1);
        assert_eq!(one.get(0), 1.into());
        assert!(stringy_hodge(&stringy_projective_closed(4, 2).unwrap())
            .unwrap()
            .is_nonnegative());
        assert_eq!(
            stringy_hodge(&LaurentPoly::q_pow(-1)),
            Err(Error::NegativeExponent(-1))
        );
        assert!(!stringy_hodge(&q(&[1, -1])).unwrap().is_nonnegative());
    }

    #[test]
    fn euler_numbers() {
        assert_eq!(stringy_euler(&LaurentPoly::one()), int(1));
        for r in 1..8u32 {
            for k in 0..r {
                let c = binomial(r as u64, k as u64) as i64;
                assert_eq!(stringy_euler(&stringy_affine_closed(r, k).unwrap()), int(c));
                if k > 0 {
                    assert_eq!(
                        stringy_euler(&stringy_projective_closed(r, k).unwrap()),
                        int(c * (k * r) as i64)
                    );
                }
            }
        }
    }

    #[test]
    fn input_validation() {
        assert!(StringyInput::new(1, 0, Variety::Affine).is_ok());
        assert!(StringyInput::new(1, 0, Variety::Projective).is_err());
        assert!(StringyInput::new(3, 3, Variety::Affine).is_err());
        let inp = StringyInput::new(4, 2, Variety::Projective).unwrap();
        assert_eq!(inp.dimension(), 11);
        assert_eq!(inp.expected_euler(), BigInt::from(48));
        assert_eq!(
            "projective".parse::<Variety>().unwrap(),
            Variety::Projective
        );
        assert!("conic".parse::<Variety>().is_err());
    }

    #[test]
    fn common_denominator_matches_termwise_sum() {
        for r in 2..6 {
            for k in 1..r {
                let termwise: RationalFn =
                    subset_terms(r, k).iter().map(SubsetTerm::rational).sum();
                assert_eq!(termwise.into_poly().unwrap(), a_subset_sum(r, k).unwrap());
            }
        }
    }

    #[test]
    fn subset_enumeration_order() {
        let terms = subset_terms(4, 3);
        assert_eq!(terms.len(), 4);
        // mask 0 is I = ∅, the full chain
        assert_eq!(terms[0].cumulative, vec![1, 2, 3, 4]);
        assert_eq!(terms[3].cumulative, vec![1, 4]);
        assert_eq!(terms[0].weights, vec![2, 6, 12]);
    }
}
