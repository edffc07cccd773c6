//! Exact stringy invariants of determinantal varieties.
//!
//! `D^k` is the variety of `r × r` matrices of rank at most `k`, and
//! `D̂^k` its projectivization. Every Grothendieck class that shows up here is
//! a polynomial in the class of the affine line, so all computations run in a
//! single variable `q` standing for `L = uv`.
//!
//! Modules, bottom-up:
//!
//! * [`exactalg`]: Laurent polynomials over big rationals, reduced rational
//!   functions, descending series.
//! * [`groth`]: classes of `GL_d`, Grassmannians, flag varieties, rank strata.
//! * [`stringy`]: stringy E-functions by subset sums, closed forms, orbit sums,
//!   the blowup route for `k = 1`, and the motivic zeta function of `det`.
//! * [`oracle`]: brute-force point counts over small prime fields.
//! * [`report`] and [`verify`]: structured verdicts and the verification
//!   suites driven by the command line tool.

pub mod error;
pub mod exactalg;
pub mod groth;
pub mod oracle;
pub mod report;
pub mod stringy;
pub mod verify;

pub use error::{Error, Result};
pub use exactalg::{Coeff, DescSeries, LaurentPoly, RationalFn};
