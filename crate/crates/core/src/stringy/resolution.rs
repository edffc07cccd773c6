//! Stringy E-function straight from log resolution data:
//! `E_st = Σ_I E(D̊_I) ∏_{i ∈ I} (q - 1) / (q^{a_i} - 1)`.

use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, RationalFn};
use crate::groth::gauss;

use super::stringy_affine_closed;

/// A locally closed stratum `D̊_I` with its E-polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub class: LaurentPoly,
    pub divisors: Vec<usize>,
}

/// Strata of a log resolution together with the log discrepancies of its
/// exceptional divisors.
///
/// Discrepancies are positive integers: the varieties handled here are
/// Gorenstein, so fractional exponents of `q` never occur.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionData {
    strata: Vec<Stratum>,
    discrepancies: Vec<u32>,
}

impl ResolutionData {
    pub fn new(strata: Vec<Stratum>, discrepancies: Vec<u32>) -> Result<Self> {
        if let Some(i) = discrepancies.iter().position(|&a| a == 0) {
            return Err(Error::InvalidInput(format!(
                "log discrepancy a_{i} must be positive"
            )));
        }
        for s in &strata {
            if let Some(&bad) = s.divisors.iter().find(|&&d| d >= discrepancies.len()) {
                return Err(Error::InvalidInput(format!(
                    "stratum refers to divisor {bad}, only {} exist",
                    discrepancies.len()
                )));
            }
        }
        Ok(Self {
            strata,
            discrepancies,
        })
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn discrepancies(&self) -> &[u32] {
        &self.discrepancies
    }
}

pub fn stringy_from_resolution(data: &ResolutionData) -> Result<LaurentPoly> {
    let q_minus_one = LaurentPoly::q_pow_minus_one(1);
    data.strata
        .iter()
        .map(|s| {
            let den: LaurentPoly = s
                .divisors
                .iter()
                .map(|&i| LaurentPoly::q_pow_minus_one(data.discrepancies[i] as i64))
                .product();
            let num = &s.class * &q_minus_one.pow(s.divisors.len() as u32);
            RationalFn::new(num, den)
        })
        .sum::<Result<RationalFn>>()?
        .into_poly()
}

/// The single blowup of the origin for `D^1`: open part `D^1 - {0}` and the
/// exceptional divisor `Ẽ_0` with `a_0 = r`, where
/// `E(D^1) = 1 + (q^r - 1)² / (q - 1)` and `E(Ẽ_0) = (E(D^1) - 1) / (q - 1)`.
pub fn k1_resolution_data(r: u32) -> Result<ResolutionData> {
    if r < 2 {
        return Err(Error::InvalidInput(format!("k = 1 needs r >= 2, got {r}")));
    }
    let q_minus_one = LaurentPoly::q_pow_minus_one(1);
    let e_d1 = RationalFn::new(
        LaurentPoly::q_pow_minus_one(r as i64).pow(2),
        q_minus_one.clone(),
    )?
    .into_poly()?
        + LaurentPoly::one();
    let open = &e_d1 - &LaurentPoly::one();
    let exceptional = RationalFn::new(open.clone(), q_minus_one)?.into_poly()?;
    ResolutionData::new(
        vec![
            Stratum {
                class: open,
                divisors: vec![],
            },
            Stratum {
                class: exceptional,
                divisors: vec![0],
            },
        ],
        vec![r],
    )
}

/// Whether the blowup route reproduces `q^r [G(1, r)]`.
pub fn k1_resolution_check(r: u32) -> bool {
    let Ok(data) = k1_resolution_data(r) else {
        return false;
    };
    match (stringy_from_resolution(&data), stringy_affine_closed(r, 1)) {
        (Ok(a), Ok(b)) => a == b && b == gauss(1, r).shift(r as i64),
        _ => false,
    }
}
