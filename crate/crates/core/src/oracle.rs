//! Brute-force point counts over small prime fields.
//!
//! A class polynomial evaluated at `q = p` must equal the number of
//! `F_p`-points of the variety it describes. Everything here enumerates
//! candidates exhaustively, in row-major odometer order, so failures are
//! reproducible.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{int, LaurentPoly};
use crate::groth::{class_gl, class_independent_tuples, gauss, rank_stratum_class};
use crate::report::{Check, InvariantReport};

/// Largest modulus accepted by [`PrimeField::new`].
pub const DEFAULT_MODULUS_CAP: u32 = 7;

/// Largest number of candidates a single enumeration may visit.
pub const DEFAULT_BUDGET: u128 = 200_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        Self::with_cap(p, DEFAULT_MODULUS_CAP)
    }

    pub fn with_cap(p: u32, cap: u32) -> Result<Self> {
        if p < 2
            || (2..p)
                .take_while(|d| d * d <= p)
                .any(|d| p.is_multiple_of(d))
        {
            return Err(Error::NotPrime(p));
        }
        if p > cap {
            return Err(Error::ModulusTooLarge { p, cap });
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    fn inv(&self, a: u32) -> u32 {
        // Fermat: a^(p-2)
        let p = self.p as u64;
        let (mut base, mut exp, mut acc) = (a as u64 % p, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc as u32
    }
}

/// `p^cells`, saturating.
pub fn candidate_count(p: u32, cells: u32) -> u128 {
    (p as u128).checked_pow(cells).unwrap_or(u128::MAX)
}

fn check_budget(p: u32, cells: u32, budget: u128) -> Result<u128> {
    let candidates = candidate_count(p, cells);
    if candidates > budget {
        return Err(Error::BudgetExceeded { candidates, budget });
    }
    Ok(candidates)
}

/// Rank over `F_p` of a row-major `rows × cols` matrix with entries in `0..p`.
pub fn rank_of_matrix(field: PrimeField, rows: usize, cols: usize, entries: &[u32]) -> usize {
    let mut m = entries.to_vec();
    row_reduce(field, rows, cols, &mut m)
}

/// Reduced row echelon form in place; returns the rank.
fn row_reduce(field: PrimeField, rows: usize, cols: usize, m: &mut [u32]) -> usize {
    debug_assert_eq!(m.len(), rows * cols);
    let p = field.p;
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| m[r * cols + col] != 0) else {
            continue;
        };
        if pivot != rank {
            for c in 0..cols {
                m.swap(pivot * cols + c, rank * cols + c);
            }
        }
        let inv = field.inv(m[rank * cols + col]);
        for c in 0..cols {
            m[rank * cols + c] = m[rank * cols + c] * inv % p;
        }
        for r in 0..rows {
            if r == rank {
                continue;
            }
            let f = m[r * cols + col];
            if f == 0 {
                continue;
            }
            for c in 0..cols {
                let sub = f * m[rank * cols + c] % p;
                m[r * cols + c] = (m[r * cols + c] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Advances a row-major odometer over `0..p`; false once it wraps around.
fn odometer_step(digits: &mut [u32], p: u32) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < p {
            return true;
        }
        *d = 0;
    }
    false
}

/// Number of `r × s` matrices over `F_p` of each rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCensus {
    pub p: u32,
    pub r: u32,
    pub s: u32,
    pub counts: BTreeMap<u32, u128>,
}

impl RankCensus {
    pub fn count(&self, j: u32) -> u128 {
        self.counts.get(&j).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.counts.values().sum()
    }

    /// Points of `D^k`: matrices of rank at most `k`.
    pub fn at_most(&self, k: u32) -> u128 {
        self.counts.range(..=k).map(|(_, c)| c).sum()
    }
}

fn census_with_prefix(field: PrimeField, r: usize, s: usize, first_row: &[u32]) -> Vec<u128> {
    let mut counts = vec![0u128; r.min(s) + 1];
    let mut rest = vec![0u32; (r - 1) * s];
    let mut m = vec![0u32; r * s];
    loop {
        m[..s].copy_from_slice(first_row);
        m[s..].copy_from_slice(&rest);
        counts[row_reduce(field, r, s, &mut m)] += 1;
        if !odometer_step(&mut rest, field.p) {
            break;
        }
    }
    counts
}

/// Exhaustive rank census, split over the values of the first row.
pub fn rank_census(field: PrimeField, r: u32, s: u32, budget: u128) -> Result<RankCensus> {
    check_budget(field.p, r * s, budget)?;
    let (ru, su) = (r as usize, s as usize);
    let mut counts = vec![0u128; ru.min(su) + 1];
    if r == 0 || s == 0 {
        counts[0] = 1;
    } else {
        let mut prefixes = Vec::new();
        let mut row = vec![0u32; su];
        loop {
            prefixes.push(row.clone());
            if !odometer_step(&mut row, field.p) {
                break;
            }
        }
        #[cfg(feature = "parallel")]
        let partials: Vec<Vec<u128>> = {
            use rayon::prelude::*;
            prefixes
                .par_iter()
                .map(|pre| census_with_prefix(field, ru, su, pre))
                .collect()
        };
        #[cfg(not(feature = "parallel"))]
        let partials: Vec<Vec<u128>> = prefixes
            .iter()
            .map(|pre| census_with_prefix(field, ru, su, pre))
            .collect();
        for part in partials {
            for (c, v) in counts.iter_mut().zip(part) {
                *c += v;
            }
        }
    }
    Ok(RankCensus {
        p: field.p,
        r,
        s,
        counts: counts
            .into_iter()
            .enumerate()
            .map(|(j, c)| (j as u32, c))
            .collect(),
    })
}

/// Number of `d`-dimensional subspaces of `F_p^n`, found by enumerating all
/// `d × n` matrices of full rank and collecting their distinct reduced row
/// echelon forms.
pub fn count_subspaces(field: PrimeField, d: u32, n: u32, budget: u128) -> Result<u128> {
    if d > n {
        return Err(Error::InvalidDimension { d, n });
    }
    if d == 0 {
        return Ok(1);
    }
    check_budget(field.p, d * n, budget)?;
    let (du, nu) = (d as usize, n as usize);
    let mut seen = HashSet::new();
    let mut m = vec![0u32; du * nu];
    loop {
        let mut work = m.clone();
        if row_reduce(field, du, nu, &mut work) == du {
            seen.insert(work);
        }
        if !odometer_step(&mut m, field.p) {
            break;
        }
    }
    Ok(seen.len() as u128)
}

/// A polynomial of degree at most `degree_bound` that vanishes at
/// `degree_bound + 1` distinct points is zero. `f` evaluates the candidate
/// difference at integer points `2, 3, ...`.
pub fn certify_identity(degree_bound: u32, f: impl Fn(i64) -> BigInt) -> bool {
    (0..=degree_bound as i64).all(|i| f(i + 2).is_zero())
}

fn value_at(p: &LaurentPoly, x: u32) -> BigInt {
    p.eval(&int(x as i64))
        .expect("nonzero evaluation point")
        .to_integer()
}

struct CensusCache {
    field: PrimeField,
    budget: u128,
    cache: HashMap<(u32, u32), RankCensus>,
}

impl CensusCache {
    fn get(&mut self, r: u32, s: u32) -> Result<&RankCensus> {
        if !self.cache.contains_key(&(r, s)) {
            let c = rank_census(self.field, r, s, self.budget)?;
            self.cache.insert((r, s), c);
        }
        Ok(&self.cache[&(r, s)])
    }
}

fn compare(name: String, expected: BigInt, found: BigInt) -> Check {
    let passed = expected == found;
    Check::new(name, passed, format!("class = {expected}, count = {found}"))
}

/// Every point-count check available up to `r_max`, pass or fail. Budget
/// violations abort with [`Error::BudgetExceeded`].
pub fn class_checks(field: PrimeField, r_max: u32, budget: u128) -> Result<Vec<Check>> {
    let p = field.p;
    let mut census = CensusCache {
        field,
        budget,
        cache: HashMap::new(),
    };
    let mut checks = Vec::new();

    for d in 0..=r_max {
        let full = census.get(d, d)?.count(d);
        checks.push(compare(
            format!("GL_{d}(F_{p})"),
            value_at(&class_gl(d), p),
            full.into(),
        ));
    }
    for n in 0..=r_max {
        for d in 0..=n {
            let count = count_subspaces(field, d, n, budget)?;
            checks.push(compare(
                format!("G({d},{n})(F_{p})"),
                value_at(&gauss(d, n), p),
                count.into(),
            ));
            let tuples = class_independent_tuples(d, n)?;
            let count = census.get(d, n)?.count(d);
            checks.push(compare(
                format!("U({d},{n})(F_{p})"),
                value_at(&tuples, p),
                count.into(),
            ));
        }
    }
    for r in 1..=r_max {
        for s in 1..=r_max {
            let c = census.get(r, s)?.clone();
            let mut cumulative = LaurentPoly::zero();
            for j in 0..=r.min(s) {
                let stratum = rank_stratum_class(r, s, j)?;
                cumulative += &stratum;
                checks.push(compare(
                    format!("rank {j} in {r}x{s}(F_{p})"),
                    value_at(&stratum, p),
                    c.count(j).into(),
                ));
                checks.push(compare(
                    format!("D^{j} in {r}x{s}(F_{p})"),
                    value_at(&cumulative, p),
                    c.at_most(j).into(),
                ));
            }
            checks.push(compare(
                format!("census total {r}x{s}(F_{p})"),
                Pow::pow(BigInt::from(p), r * s),
                c.total().into(),
            ));
            let transposed = census.get(s, r)?;
            checks.push(Check::new(
                format!("census symmetry {r}x{s}(F_{p})"),
                transposed.counts == c.counts,
                format!("{:?} vs {:?}", c.counts, transposed.counts),
            ));
        }
    }
    // q^{kr} = 1 + Σ_m [G(m, r)][U(r - m, k)] on maps F_p^r → F_p^k.
    for r in 1..=r_max {
        for k in 1..=r {
            let c = census.get(r, k)?;
            let mut rhs = BigInt::from(1);
            let mut per_term = true;
            for m in (r - k)..r {
                let term = value_at(&(&gauss(m, r) * &class_independent_tuples(r - m, k)?), p);
                per_term &= term == BigInt::from(c.count(r - m));
                rhs += term;
            }
            let lhs = Pow::pow(BigInt::from(p), k * r);
            checks.push(Check::new(
                format!("rank identity r={r} k={k} (F_{p})"),
                per_term && lhs == rhs && BigInt::from(c.total()) == lhs,
                format!("p^kr = {lhs}, 1 + sum = {rhs}, census = {}", c.total()),
            ));
        }
    }
    Ok(checks)
}

/// Runs [`class_checks`] and fails with the first mismatch.
pub fn verify_classes(field: PrimeField, r_max: u32, budget: u128) -> Result<InvariantReport> {
    let checks = class_checks(field, r_max, budget)?;
    if let Some(bad) = checks.iter().find(|c| !c.passed) {
        return Err(Error::MismatchFound {
            check: bad.name.clone(),
            expected: "class value equal to point count".into(),
            found: bad.details.clone(),
        });
    }
    Ok(InvariantReport::from_checks(
        format!("point counts over F_{} up to r = {r_max}", field.p),
        checks,
    ))
}
