//! Dense univariate polynomials over `Q`, index = exponent. Only used for
//! division and gcd, where a contiguous coefficient vector is the natural shape.

use num_traits::{One, Zero};

use super::{Coeff, LaurentPoly};

pub(crate) type Dense = Vec<Coeff>;

/// Dense form of a polynomial with no negative exponents.
pub(crate) fn to_dense(p: &LaurentPoly) -> Dense {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    assert!(
        p.order().unwrap_or(0) >= 0,
        "negative exponent in dense conversion"
    );
    let mut v = vec![Coeff::zero(); deg as usize + 1];
    for (e, c) in p.terms() {
        v[e as usize] = c.clone();
    }
    v
}

pub(crate) fn from_dense(v: &[Coeff]) -> LaurentPoly {
    LaurentPoly::from_terms(
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as i64, c.clone())),
    )
}

fn trim(v: &mut Dense) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn divrem(a: &[Coeff], b: &[Coeff]) -> (Dense, Dense) {
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let db = b.len() - 1;
    let lead_inv = Coeff::one() / &b[db];
    let mut quot = vec![Coeff::zero(); r.len() - db];
    while r.len() > db {
        let top = r.len() - 1;
        let c = &r[top] * &lead_inv;
        let shift = top - db;
        if !c.is_zero() {
            for (i, bc) in b.iter().enumerate() {
                r[shift + i] -= &c * bc;
            }
            quot[shift] = c;
        }
        r.pop();
        trim(&mut r);
    }
    trim(&mut quot);
    (quot, r)
}

fn make_monic(v: &mut Dense) {
    if let Some(lead) = v.last().cloned() {
        if !lead.is_one() {
            for c in v.iter_mut() {
                *c /= &lead;
            }
        }
    }
}

/// Monic gcd by the Euclidean algorithm. Remainders are made monic at every
/// step to keep coefficient growth down.
pub(crate) fn gcd(a: &[Coeff], b: &[Coeff]) -> Dense {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    make_monic(&mut x);
    make_monic(&mut y);
    while !y.is_empty() {
        let (_, mut r) = divrem(&x, &y);
        make_monic(&mut r);
        x = y;
        y = r;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(c: &[i64]) -> Dense {
        c.iter().map(|&x| Coeff::from_integer(x.into())).collect()
    }

    #[test]
    fn long_division() {
        // (q^3 + q^2 - q - 1) / (q - 1) = q^2 + 2q + 1
        let (quo, rem) = divrem(&d(&[-1, -1, 1, 1]), &d(&[-1, 1]));
        assert_eq!(quo, d(&[1, 2, 1]));
        assert!(rem.is_empty());
        let (quo, rem) = divrem(&d(&[1, 0, 1]), &d(&[1, 1]));
        assert_eq!(quo, d(&[-1, 1]));
        assert_eq!(rem, d(&[2]));
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // gcd(q^4 - 1, q^6 - 1) = q^2 - 1
        let g = gcd(&d(&[-1, 0, 0, 0, 1]), &d(&[-1, 0, 0, 0, 0, 0, 1]));
        assert_eq!(g, d(&[-1, 0, 1]));
        let g = gcd(&d(&[1, 1]), &d(&[2]));
        assert_eq!(g, d(&[1]));
    }
}
