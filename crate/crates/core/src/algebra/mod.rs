//! Exact arithmetic kernel: rational polynomials, rational functions,
//! truncated power series and a complex root finder.
//!
//! Everything except [`roots`] works over `BigRational`; floating point
//! only enters when numerical roots are requested.

mod poly;
mod ratfun;
mod roots;
mod series;

pub use poly::Poly;
pub use ratfun::{pole_regularized_value, ratfun_equal, RationalFunction};
pub use roots::{complex_roots, complex_roots_with, ComplexRootSet, RootFinderConfig};
pub use series::{series_exp, TruncatedSeries};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number used throughout the crate.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `base^exp` for a possibly negative exponent. Panics on `0^negative`.
pub fn rpow(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        assert!(!base.is_zero(), "zero to a negative power");
        num_traits::pow(base.recip(), exp.unsigned_abs() as usize)
    }
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // huge numerators/denominators: go through a scaled ratio
        let n = x.numer().bits() as i64;
        let d = x.denom().bits() as i64;
        let shift = n - d;
        let scaled = if shift > 0 {
            x / Rational::from_integer(BigInt::one() << (shift as usize))
        } else {
            x * Rational::from_integer(BigInt::one() << ((-shift) as usize))
        };
        scaled.to_f64().unwrap_or(f64::NAN) * 2f64.powi(shift as i32)
    })
}

/// Exact rendering as `p/q` (or `p` when integral).
pub fn fmt_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub(crate) fn is_negative(x: &Rational) -> bool {
    x.is_negative()
}
