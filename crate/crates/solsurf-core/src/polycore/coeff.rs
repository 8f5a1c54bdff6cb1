//! Coefficient domains for polynomials.
//!
//! Two domains are used throughout: exact rationals (`BigRational`) where
//! counting must be certified, and `f64` where Newton iterates. Complex
//! variants of both exist for substitutions like `x -> x + iy` and for
//! root finding.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A commutative coefficient ring with exact equality.
///
/// Division is only invoked where exactness is guaranteed by the caller
/// (content removal, fraction-free elimination) or where the domain is
/// inexact anyway (`f64`).
pub trait Coeff:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;
}

impl Coeff for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl Coeff for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
}

impl Coeff for Complex<BigRational> {
    fn from_i64(v: i64) -> Self {
        Complex::new(BigRational::from_i64(v), BigRational::zero())
    }
}

impl Coeff for Complex<f64> {
    fn from_i64(v: i64) -> Self {
        Complex::new(v as f64, 0.0)
    }
}

/// Exact rational from an `f64` (every finite float is a dyadic rational).
pub fn rat_from_f64(v: f64) -> BigRational {
    BigRational::from_float(v).expect("finite float")
}

/// Lossy conversion used when handing exact data to the float pipeline.
pub fn rat_to_f64(v: &BigRational) -> f64 {
    v.to_f64().unwrap_or_else(|| {
        // Fall back to a scaled division when numerator/denominator
        // individually overflow f64.
        let num = v.numer();
        let den = v.denom();
        let shift = (num.bits() as i64 - den.bits() as i64).clamp(-1000, 1000);
        let scaled = if shift > 0 {
            BigRational::new(num.clone() >> shift as usize, den.clone())
        } else {
            BigRational::new(num.clone(), den.clone() >> (-shift) as usize)
        };
        scaled.to_f64().unwrap_or(f64::NAN) * 2f64.powi(shift as i32)
    })
}

/// Rational gcd: gcd of numerators over lcm of denominators. Used for
/// content extraction; gcd(0, x) = |x|.
pub fn rat_gcd(a: &BigRational, b: &BigRational) -> BigRational {
    use num_integer::Integer;
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    let num = a.numer().gcd(b.numer());
    let den = a.denom().lcm(b.denom());
    BigRational::new(num, den)
}
