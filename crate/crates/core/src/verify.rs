//! Verification suites: pass/fail matrices over ranges of inputs.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactalg::LaurentPoly;
use crate::groth::{gauss, rank_identity_check};
use crate::oracle::{class_checks, PrimeField, DEFAULT_BUDGET};
use crate::report::{Check, InvariantReport};
use crate::stringy::{
    a_recursive, a_subset_sum, k1_resolution_check, orbit_convergence, stringy_affine_closed,
    stringy_affine_sum, stringy_euler, stringy_projective_closed, stringy_projective_sum,
    zeta_closed_expansion, zeta_direct_series, StringyInput, Variety,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Oracle,
    Orbits,
    Zeta,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "identities" => Suite::Identities,
            "oracle" => Suite::Oracle,
            "orbits" => Suite::Orbits,
            "zeta" => Suite::Zeta,
            "all" => Suite::All,
            other => return Err(Error::InvalidInput(format!("unknown suite {other:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub rmax: u32,
    /// Prime for the oracle suite.
    pub p: u32,
    /// Series order for the zeta suite, truncation cap for the orbit suite.
    pub order: u32,
    pub budget: u128,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            rmax: 4,
            p: 2,
            order: 6,
            budget: DEFAULT_BUDGET,
        }
    }
}

fn grid(rmax: u32) -> impl Iterator<Item = (u32, u32)> {
    (2..=rmax).flat_map(|r| (1..r).map(move |k| (r, k)))
}

fn poly_check(name: String, got: Result<LaurentPoly>, want: &LaurentPoly) -> Check {
    match got {
        Ok(g) => Check::new(name, &g == want, format!("got {g}, expected {want}")),
        Err(e) => Check::new(name, false, e.to_string()),
    }
}

/// Exact identities between the different routes to each invariant.
pub fn identities(rmax: u32) -> InvariantReport {
    let mut checks = Vec::new();
    for (r, k) in grid(rmax) {
        let affine = stringy_affine_closed(r, k).expect("k < r");
        let projective = stringy_projective_closed(r, k).expect("1 <= k < r");
        let g = gauss(k, r);
        checks.push(poly_check(
            format!("affine sum r={r} k={k}"),
            stringy_affine_sum(r, k),
            &affine,
        ));
        checks.push(poly_check(
            format!("projective sum r={r} k={k}"),
            stringy_projective_sum(r, k),
            &projective,
        ));
        checks.push(poly_check(
            format!("A subset r={r} k={k}"),
            a_subset_sum(r, k),
            &g,
        ));
        checks.push(poly_check(
            format!("A recursive r={r} k={k}"),
            a_recursive(r, k),
            &g,
        ));

        let kr = (k * r) as i64;
        let lhs = &projective.shift(kr) * &LaurentPoly::q_pow_minus_one(1);
        let rhs = &LaurentPoly::q_pow_minus_one(kr) * &affine;
        checks.push(poly_check(
            format!("projective/affine r={r} k={k}"),
            Ok(lhs),
            &rhs,
        ));

        checks.push(Check::new(
            format!("non-negative r={r} k={k}"),
            projective.all_coeffs_nonnegative(),
            projective.to_string(),
        ));
        for variety in [Variety::Affine, Variety::Projective] {
            let input = StringyInput::new(r, k, variety).expect("valid grid point");
            let p = input.closed_form();
            let dim = input.dimension() as i64;
            checks.push(Check::new(
                format!("degree/leading {variety} r={r} k={k}"),
                p.degree() == Some(dim)
                    && p.leading_coeff()
                        .is_some_and(|c| *c == crate::exactalg::int(1)),
                format!("degree {:?}, dimension {dim}", p.degree()),
            ));
            let e = stringy_euler(&p);
            checks.push(Check::new(
                format!("euler {variety} r={r} k={k}"),
                e == input.expected_euler().into(),
                format!("got {e}, expected {}", input.expected_euler()),
            ));
        }
    }
    for r in 1..=rmax {
        for k in 1..=r {
            checks.push(Check::new(
                format!("rank identity r={r} k={k}"),
                rank_identity_check(r, k),
                "symbolic",
            ));
        }
        if r >= 2 {
            checks.push(Check::new(
                format!("k=1 blowup route r={r}"),
                k1_resolution_check(r),
                "resolution data vs closed form",
            ));
        }
    }
    InvariantReport::from_checks(format!("identities up to r = {rmax}"), checks)
}

/// Point counts over `F_p`.
pub fn oracle(p: u32, rmax: u32, budget: u128) -> Result<InvariantReport> {
    let field = PrimeField::new(p)?;
    Ok(InvariantReport::from_checks(
        format!("point counts over F_{p} up to r = {rmax}"),
        class_checks(field, rmax, budget)?,
    ))
}

/// Truncated orbit sums against the closed forms, at truncation `cap`.
pub fn orbits(rmax: u32, cap: u32) -> InvariantReport {
    let mut checks = Vec::new();
    for (r, k) in grid(rmax) {
        for variety in [Variety::Affine, Variety::Projective] {
            let name = format!("orbits {variety} r={r} k={k} N={cap}");
            checks.push(match orbit_convergence(r, k, cap, variety) {
                Ok(c) => Check::new(
                    name,
                    c.is_consistent(),
                    format!(
                        "{} matched, {} mismatched, {} below bound {:?}",
                        c.matched.len(),
                        c.mismatched.len(),
                        c.flagged.len(),
                        c.bound
                    ),
                ),
                Err(e) => Check::new(name, false, e.to_string()),
            });
        }
    }
    InvariantReport::from_checks(format!("orbit sums up to r = {rmax}"), checks)
}

/// Closed expansion of the zeta function against the direct orbit sum.
pub fn zeta(rmax: u32, order: u32) -> InvariantReport {
    let checks = (1..=rmax)
        .map(|r| {
            let closed = zeta_closed_expansion(r, order);
            let direct = zeta_direct_series(r, order);
            let bad: Vec<u32> = (0..=order)
                .filter(|&n| closed.coefficient(n) != direct.coefficient(n))
                .collect();
            Check::new(
                format!("zeta r={r} through T^{order}"),
                bad.is_empty(),
                if bad.is_empty() {
                    "all coefficients agree".to_string()
                } else {
                    format!("differ at n = {bad:?}")
                },
            )
        })
        .collect();
    InvariantReport::from_checks(format!("zeta series up to r = {rmax}"), checks)
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<InvariantReport> {
    Ok(match suite {
        Suite::Identities => identities(opts.rmax),
        Suite::Oracle => oracle(opts.p, opts.rmax, opts.budget)?,
        Suite::Orbits => orbits(opts.rmax, opts.order),
        Suite::Zeta => zeta(opts.rmax, opts.order),
        Suite::All => {
            let mut all = identities(opts.rmax);
            all.title = format!("all suites up to r = {}", opts.rmax);
            all.merge(oracle(opts.p, opts.rmax, opts.budget)?);
            all.merge(orbits(opts.rmax, opts.order));
            all.merge(zeta(opts.rmax, opts.order));
            all
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_small() {
        let opts = VerifyOptions {
            rmax: 3,
            ..Default::default()
        };
        for suite in ["identities", "oracle", "orbits", "zeta", "all"] {
            let rep = run_suite(suite.parse().unwrap(), &opts).unwrap();
            assert!(rep.all_passed(), "{suite}: {:?}", rep.first_failure());
            assert!(!rep.checks.is_empty());
        }
    }

    #[test]
    fn oracle_errors_surface() {
        assert_eq!(
            oracle(4, 2, DEFAULT_BUDGET).unwrap_err(),
            Error::NotPrime(4)
        );
        assert!(matches!(
            oracle(2, 4, 100),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!("nothing".parse::<Suite>().is_err());
    }
}
