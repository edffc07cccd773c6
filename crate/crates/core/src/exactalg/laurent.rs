use std::collections::BTreeMap;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use super::{dense, Coeff};
use crate::error::{Error, Result};

/// Sparse Laurent polynomial in one variable `q` with exact rational
/// coefficients.
///
/// Zero coefficients are never stored, so the zero polynomial is the empty map
/// and derived equality is mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Coeff>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Coeff::one())
    }

    pub fn constant(c: impl Into<Coeff>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · q^exp`.
    pub fn monomial(c: impl Into<Coeff>, exp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(Coeff::one(), exp)
    }

    /// `q^n - 1`.
    pub fn q_pow_minus_one(n: i64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        let mut p = Self::q_pow(n);
        p.add_term(0, -Coeff::one());
        p
    }

    /// `1 + q + ... + q^(n-1)`.
    pub fn geometric(n: u32) -> Self {
        Self::from_terms((0..n as i64).map(|e| (e, Coeff::one())))
    }

    /// Integer coefficients listed from exponent 0 upwards.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(e, &c)| (e as i64, Coeff::from_integer(c.into()))),
        )
    }

    /// Accumulates `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Coeff)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(One::is_one)
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest exponent, `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Smallest exponent, `None` for zero.
    pub fn order(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.values().next_back()
    }

    pub fn coeff(&self, exp: i64) -> Coeff {
        self.terms.get(&exp).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Coeff)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn exponents(&self) -> impl DoubleEndedIterator<Item = i64> + '_ {
        self.terms.keys().copied()
    }

    /// Multiplication by `q^by`.
    pub fn shift(&self, by: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + by, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `self / divisor` when the quotient is again a Laurent polynomial.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        let d_ord = divisor.order()?;
        let Some(s_ord) = self.order() else {
            return Some(Self::zero());
        };
        let (quo, rem) = dense::divrem(
            &dense::to_dense(&self.shift(-s_ord)),
            &dense::to_dense(&divisor.shift(-d_ord)),
        );
        rem.is_empty()
            .then(|| dense::from_dense(&quo).shift(s_ord - d_ord))
    }

    /// Terms with exponent `>= cutoff`.
    pub fn truncate_below(&self, cutoff: i64) -> Self {
        Self {
            terms: self
                .terms
                .range(cutoff..)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        }
    }

    /// Exact value at `x`.
    pub fn eval(&self, x: &Coeff) -> Result<Coeff> {
        if x.is_zero() {
            if let Some(o) = self.order().filter(|&o| o < 0) {
                return Err(Error::EvalAtZeroWithNegativeExponent(o));
            }
            return Ok(self.coeff(0));
        }
        let mut acc = Coeff::zero();
        for (&e, c) in &self.terms {
            let e = i32::try_from(e).expect("exponent out of range for evaluation");
            acc += c * Pow::pow(x, e);
        }
        Ok(acc)
    }

    /// Value at an integer point, for polynomials with integer coefficients and
    /// no negative exponents.
    pub fn eval_int(&self, x: &BigInt) -> Option<BigInt> {
        let mut acc = BigInt::zero();
        for (&e, c) in &self.terms {
            if e < 0 || !c.is_integer() {
                return None;
            }
            acc += c.numer() * Pow::pow(x, e as u64);
        }
        Some(acc)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Integer coefficients in ascending exponent order, if all are integers.
    pub fn integer_terms(&self) -> Option<Vec<(i64, BigInt)>> {
        self.terms
            .iter()
            .map(|(&e, c)| c.is_integer().then(|| (e, c.to_integer())))
            .collect()
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Renders with `(uv)^n` in place of `q^n`, LaTeX style.
    pub fn to_latex_uv(&self) -> String {
        render(self, |e| match e {
            1 => "(uv)".to_string(),
            _ => format!("(uv)^{{{e}}}"),
        })
    }
}

fn render(p: &LaurentPoly, var: impl Fn(i64) -> String) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if e == 0 {
            out.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                if !abs.is_integer() {
                    out.push(' ');
                }
            }
            out.push_str(&var(e));
        }
    }
    out
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, |e| match e {
            1 => "q".to_string(),
            _ => format!("q^{e}"),
        }))
    }
}

impl From<Coeff> for LaurentPoly {
    fn from(c: Coeff) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(Coeff::from_integer(c.into()))
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c.clone());
        }
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = BTreeMap::<i64, Coeff>::new();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                *out.entry(ea + eb).or_insert_with(Coeff::zero) += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: out }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$m(&rhs) }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly { (&self).$m(rhs) }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl<'a> Sum<&'a LaurentPoly> for LaurentPoly {
    fn sum<I: Iterator<Item = &'a LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += p;
            acc
        })
    }
}

impl Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}
