//! Exact arithmetic over Q and Q(i), plus arbitrary-precision complex
//! floating values for the numeric oracle.
//!
//! All values are immutable after construction and canonical by
//! construction, so equality is structural and everything is `Send + Sync`.

mod approx;
mod gaussian;

pub use approx::{
    approx_magnitude_below, float_to_rational, magnitude_below, rational_to_float, rationalize,
    rationalize_complex, ApproxComplex, BigFloat,
};
pub use gaussian::{GaussianRational, ParseGaussianError};

use num_bigint::BigInt;
use thiserror::Error;

/// Exact rational number, canonical (reduced, positive denominator) by
/// construction.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumError {
    #[error("division by zero in Q(i)")]
    DivisionByZero,
}

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as an exact rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}
