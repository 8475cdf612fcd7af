//! Foundation arithmetic: complex log-gamma, Pochhammer symbols, exact
//! Bernoulli/Euler data, compensated summation and series acceleration.

mod accel;
mod bernoulli;
mod gamma;
mod sum;

pub use accel::{euler_transform, expm1, exprel, AccelSum};
pub use bernoulli::{
    bernoulli_number, bernoulli_number_f64, bernoulli_poly, bernoulli_poly_coeffs,
    bernoulli_poly_exact, binomial, debug_corrupt_bernoulli_table, euler_poly, euler_poly_coeffs,
    euler_poly_exact, PolyCoeffs, Rational, MAX_DEGREE,
};
pub(crate) use bernoulli::bernoulli_number_f64_unchecked;
pub use gamma::{gamma, ln_gamma, pochhammer, recip_gamma};
pub use sum::{compensated_sum, CompensatedSum};
