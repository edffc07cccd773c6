//! Exact arithmetic kernel.

mod dense;
mod laurent;
mod ratfn;
mod series;

pub use laurent::LaurentPoly;
pub use ratfn::RationalFn;
pub use series::DescSeries;

/// Arbitrary-precision rational coefficient.
pub type Coeff = num_rational::BigRational;

/// `n / d` as a [`Coeff`].
pub fn rat(n: i64, d: i64) -> Coeff {
    Coeff::new(n.into(), d.into())
}

/// Integer as a [`Coeff`].
pub fn int(n: i64) -> Coeff {
    Coeff::from_integer(n.into())
}
