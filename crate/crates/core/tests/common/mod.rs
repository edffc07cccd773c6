#![allow(dead_code)]

use detstringy::exactalg::rat;
use detstringy::{LaurentPoly, RationalFn};
use proptest::prelude::*;

pub fn coeff() -> impl Strategy<Value = (i64, i64)> {
    (-12i64..=12, 1i64..=5)
}

/// Sparse Laurent polynomials with small rational coefficients.
pub fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-5i64..=5, coeff()), 0..6).prop_map(|terms| {
        let mut p = LaurentPoly::zero();
        for (e, (n, d)) in terms {
            p.add_term(e, rat(n, d));
        }
        p
    })
}

pub fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

pub fn ratfn() -> impl Strategy<Value = RationalFn> {
    (laurent(), nonzero_laurent()).prop_map(|(n, d)| RationalFn::new(n, d).unwrap())
}

/// Nonzero evaluation points.
pub fn point() -> impl Strategy<Value = (i64, i64)> {
    (-7i64..=7, 1i64..=4).prop_filter("nonzero", |(n, _)| *n != 0)
}
