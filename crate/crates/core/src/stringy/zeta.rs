//! Motivic zeta function of `det` on `r × r` matrices, as a power series in
//! an auxiliary variable `T` with Laurent polynomial coefficients in `q`.

use std::collections::BTreeMap;

use crate::exactalg::LaurentPoly;
use crate::groth::{partitions_of, PartitionTail};

use super::orbit::orbit_measure;
use super::subset_terms;

/// `Σ_{n ≤ order} c_n T^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaSeries {
    pub r: u32,
    pub coefficients: BTreeMap<u32, LaurentPoly>,
    pub order: u32,
}

impl ZetaSeries {
    pub fn coefficient(&self, n: u32) -> &LaurentPoly {
        &self.coefficients[&n]
    }
}

/// Coefficient of `T^n`: the sum of `μ(C_λ)` over all `λ_1 ≥ ... ≥ λ_r ≥ 0`
/// with `Σ λ_i = n`, using chains that start at `i_0 = 0`.
pub fn zeta_coefficient_direct(r: u32, n: u32) -> LaurentPoly {
    partitions_of(n, r as usize)
        .map(|lambda| orbit_measure(&PartitionTail::new(r, r, lambda).expect("partition")))
        .sum()
}

pub fn zeta_direct_series(r: u32, order: u32) -> ZetaSeries {
    ZetaSeries {
        r,
        coefficients: (0..=order)
            .map(|n| (n, zeta_coefficient_direct(r, n)))
            .collect(),
        order,
    }
}

type TSeries = BTreeMap<u32, LaurentPoly>;

fn t_mul(a: &TSeries, b: &TSeries, max: u32) -> TSeries {
    let mut out = TSeries::new();
    for (&ea, ca) in a {
        for (&eb, cb) in b.range(..=max.saturating_sub(ea)) {
            if ea + eb > max {
                continue;
            }
            let slot = out.entry(ea + eb).or_default();
            *slot += &(ca * cb);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Expansion of `q^{r²} T^{-r} Σ_{I ⊂ {1..r-1}} ∏_{i ∈ I^c_r} [GL_d][G(d, i)]² / (q^{i²} T^{-i} - 1)`
/// through `T^order`, each factor read as `Σ_{j ≥ 1} q^{-i² j} T^{i j}`.
pub fn zeta_closed_expansion(r: u32, order: u32) -> ZetaSeries {
    assert!(r >= 1, "zeta function needs r >= 1");
    // Before the T^{-r} shift, exponents run up to order + r.
    let max = order + r;
    let mut total = TSeries::new();
    for term in subset_terms(r, r) {
        let mut acc: TSeries = [(0, LaurentPoly::one())].into();
        for &i in &term.cumulative[1..] {
            let factor: TSeries = (1..)
                .map(|j| i * j)
                .take_while(|&e| e <= max)
                .map(|e| (e, LaurentPoly::q_pow(-(i as i64) * e as i64)))
                .collect();
            acc = t_mul(&acc, &factor, max);
        }
        for (e, c) in acc {
            let slot = total.entry(e).or_default();
            *slot += &(&c * &term.class);
        }
    }
    let prefactor = (r * r) as i64;
    let coefficients = (0..=order)
        .map(|n| {
            let c = total.get(&(n + r)).cloned().unwrap_or_default();
            (n, c.shift(prefactor))
        })
        .collect();
    ZetaSeries {
        r,
        coefficients,
        order,
    }
}
