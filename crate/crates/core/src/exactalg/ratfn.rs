use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use super::dense::{self, from_dense, to_dense};
use super::{DescSeries, LaurentPoly};
use crate::error::{Error, Result};

/// Reduced quotient of two Laurent polynomials.
///
/// Canonical form: numerator and denominator are coprime, the denominator has
/// order 0 and leading coefficient 1. Two equal rational functions therefore
/// have identical fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    /// Builds `num / den` in canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        let Some(den_order) = den.order() else {
            return Err(Error::DivisionByZero);
        };
        if num.is_zero() {
            return Ok(Self::zero());
        }
        // Move the pure q-power of the denominator into the numerator, then
        // strip the numerator's own q-power; neither part can share it.
        let den0 = den.shift(-den_order);
        let num_shifted = num.shift(-den_order);
        let num_order = num_shifted.order().expect("nonzero numerator");
        let num0 = num_shifted.shift(-num_order);

        let mut n = to_dense(&num0);
        let mut d = to_dense(&den0);
        if d.len() > 1 && n.len() > 1 {
            let g = dense::gcd(&n, &d);
            if g.len() > 1 {
                n = dense::divrem(&n, &g).0;
                d = dense::divrem(&d, &g).0;
            }
        }
        let lead = d.last().cloned().expect("nonzero denominator");
        if !lead.is_one() {
            for c in n.iter_mut().chain(d.iter_mut()) {
                *c /= &lead;
            }
        }
        Ok(Self {
            num: from_dense(&n).shift(num_order),
            den: from_dense(&d),
        })
    }

    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The Laurent polynomial equal to `self`, if the denominator divides out.
    pub fn to_poly(&self) -> Result<LaurentPoly> {
        if self.is_polynomial() {
            Ok(self.num.clone())
        } else {
            Err(Error::NotPolynomial(self.to_string()))
        }
    }

    pub fn into_poly(self) -> Result<LaurentPoly> {
        if self.is_polynomial() {
            Ok(self.num)
        } else {
            Err(Error::NotPolynomial(self.to_string()))
        }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn scale_poly(&self, p: &LaurentPoly) -> Self {
        Self::new(&self.num * p, self.den.clone()).expect("denominator stays nonzero")
    }

    /// Expansion in descending powers of `q`, keeping exponents `>= cutoff`.
    ///
    /// Long division from the top: the denominator has order 0, so each step
    /// strictly lowers the degree of the remainder.
    pub fn series_desc(&self, cutoff: i64) -> DescSeries {
        let den_deg = self.den.degree().expect("nonzero denominator");
        let den_lead = self
            .den
            .leading_coeff()
            .expect("nonzero denominator")
            .clone();
        let mut rem = self.num.clone();
        let mut quot = LaurentPoly::zero();
        while let Some(top) = rem.degree() {
            let e = top - den_deg;
            if e < cutoff {
                break;
            }
            let c = rem.coeff(top) / &den_lead;
            rem -= &self.den.shift(e).scale(&c);
            quot.add_term(e, c);
        }
        DescSeries::new(cutoff, quot)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFn::new(&self.num + &rhs.num, self.den.clone())
                .expect("denominator stays nonzero");
        }
        // Over lcm(den_a, den_b) instead of the plain product.
        let da = to_dense(&self.den);
        let db = to_dense(&rhs.den);
        let g = dense::gcd(&da, &db);
        let ca = from_dense(&dense::divrem(&db, &g).0);
        let cb = from_dense(&dense::divrem(&da, &g).0);
        let num = &(&self.num * &ca) + &(&rhs.num * &cb);
        RationalFn::new(num, &self.den * &ca).expect("denominator stays nonzero")
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        if self.is_zero() || rhs.is_zero() {
            return RationalFn::zero();
        }
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("denominator stays nonzero")
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $m(self, rhs: RationalFn) -> RationalFn { (&self).$m(&rhs) }
        }
        impl $tr<&RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $m(self, rhs: &RationalFn) -> RationalFn { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl std::iter::Sum for RationalFn {
    fn sum<I: Iterator<Item = RationalFn>>(iter: I) -> Self {
        iter.fold(RationalFn::zero(), |acc, f| &acc + &f)
    }
}

impl std::iter::Product for RationalFn {
    fn product<I: Iterator<Item = RationalFn>>(iter: I) -> Self {
        iter.fold(RationalFn::one(), |acc, f| &acc * &f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::exactalg::rat;

    fn q(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(c)
    }

    fn is_unit_normalized(f: &RationalFn) -> bool {
        f.den.order() == Some(0) && f.den.leading_coeff().is_some_and(|c| c.is_one())
    }

    #[test]
    fn telescoping_factor() {
        let f = RationalFn::new(q(&[-1, 0, 1]), q(&[-1, 1])).unwrap();
        assert_eq!(f.num(), &q(&[1, 1]));
        assert!(f.den().is_one());
    }

    #[test]
    fn self_quotient_is_one() {
        let p = q(&[3, -1, 0, 4]).shift(-3);
        assert_eq!(RationalFn::new(p.clone(), p).unwrap(), RationalFn::one());
    }

    #[test]
    fn exceptional_divisor_class_at_r2() {
        // (q^3 + q^2 - q - 1)/(q - 1) = q^2 + 2q + 1
        let f = RationalFn::new(q(&[-1, -1, 1, 1]), q(&[-1, 1])).unwrap();
        assert_eq!(f.to_poly().unwrap(), q(&[1, 2, 1]));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFn::new(q(&[1]), LaurentPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn to_poly_geometric_and_failure() {
        let f = RationalFn::new(q(&[-1, 0, 0, 0, 1]), q(&[-1, 1])).unwrap();
        assert_eq!(f.to_poly().unwrap(), q(&[1, 1, 1, 1]));
        let g = RationalFn::new(q(&[1, 0, 1]), q(&[1, 1])).unwrap();
        assert!(matches!(g.to_poly(), Err(Error::NotPolynomial(_))));
    }

    #[test]
    fn normalization_moves_q_powers_and_scales() {
        // (2q) / (4q^3 + 4q^2) = (1/2) q^-1 / (q + 1)
        let f = RationalFn::new(q(&[0, 2]), q(&[0, 0, 4, 4])).unwrap();
        assert_eq!(f.num(), &LaurentPoly::monomial(rat(1, 2), -1));
        assert_eq!(f.den(), &q(&[1, 1]));
        assert!(is_unit_normalized(&f));
    }

    #[test]
    fn field_operations() {
        let a = RationalFn::new(q(&[1]), q(&[-1, 1])).unwrap();
        let b = RationalFn::new(q(&[1]), q(&[1, 1])).unwrap();
        // 1/(q-1) + 1/(q+1) = 2q/(q^2-1)
        let s = &a + &b;
        assert_eq!(s.num(), &q(&[0, 2]));
        assert_eq!(s.den(), &q(&[-1, 0, 1]));
        assert_eq!(&s - &b, a);
        assert_eq!((&a * &b).den(), &q(&[-1, 0, 1]));
        assert_eq!(a.div(&a).unwrap(), RationalFn::one());
        assert_eq!(a.div(&RationalFn::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn series_of_geometric_in_inverse_square() {
        // 1/(1 - q^-2) = q^2/(q^2 - 1)
        let f = RationalFn::new(q(&[0, 0, 1]), q(&[-1, 0, 1])).unwrap();
        let s = f.series_desc(-5);
        let expected: LaurentPoly = [0, -2, -4].iter().map(|&e| LaurentPoly::q_pow(e)).sum();
        assert_eq!(s.terms(), &expected);
        assert_eq!(s.cutoff(), -5);
    }

    #[test]
    fn series_of_polynomial_is_itself() {
        let p = q(&[1, -2, 0, 5]).shift(-1);
        let f = RationalFn::from_poly(p.clone());
        assert_eq!(f.series_desc(-1).terms(), &p);
        assert_eq!(f.series_desc(-10).terms(), &p);
        assert_eq!(f.series_desc(1).terms(), &p.truncate_below(1));
    }

    #[test]
    fn series_matches_partial_orbit_sums_for_r2_k1() {
        // (1+q)^2 (q-1) / (1 - q^-2) against partial sums over m <= n of
        // (1+q)^2 (q-1) q^(-2m).
        let base = &q(&[1, 1]).pow(2) * &q(&[-1, 1]);
        let f = RationalFn::new(base.shift(2), q(&[-1, 0, 1])).unwrap();
        assert_eq!(f.to_poly().unwrap(), q(&[0, 0, 1, 1]));
        for n in 0..6i64 {
            let partial: LaurentPoly = (0..=n).map(|m| base.shift(-2 * m)).sum();
            let cutoff = 3 - 2 * n;
            assert_eq!(
                f.series_desc(cutoff).terms(),
                &partial.truncate_below(cutoff),
                "n = {n}"
            );
        }
    }
}
