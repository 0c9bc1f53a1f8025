//! Scalar abstraction shared by the polynomial and matrix layers.

use std::fmt::Debug;
use std::ops::{Div, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A field element usable as a polynomial coefficient or matrix entry.
///
/// Implemented for `f32`, `f64`, exact [`BigRational`] and the extended
/// precision [`crate::numerics::Approx`] type.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
{
    fn from_i64(v: i64) -> Self;

    /// Nearest representable value of an exact rational.
    fn from_rational(q: &BigRational) -> Self;

    /// Approximate magnitude used to rank pivots.
    fn magnitude(&self) -> f64;

    fn from_usize(v: usize) -> Self {
        Self::from_i64(v as i64)
    }
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn from_rational(q: &BigRational) -> Self {
        rational_to_f64(q)
    }

    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Scalar for f32 {
    fn from_i64(v: i64) -> Self {
        v as f32
    }

    fn from_rational(q: &BigRational) -> Self {
        rational_to_f64(q) as f32
    }

    fn magnitude(&self) -> f64 {
        f64::from(self.abs())
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }

    fn magnitude(&self) -> f64 {
        rational_to_f64(self).abs()
    }
}

/// Converts an exact rational to the nearest `f64`, staying accurate when
/// numerator and denominator individually overflow `f64`.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    let (num, den) = (q.numer(), q.denom());
    if let (Some(a), Some(b)) = (num.to_f64(), den.to_f64()) {
        if a.is_finite() && b.is_finite() && a.abs() < 9.0e15 && b < 9.0e15 {
            return a / b;
        }
    }
    // Scale so the integer quotient carries 64 significant bits.
    let shift = den.bits() as i64 - num.abs().bits() as i64 + 64;
    let scaled = if shift >= 0 {
        (num << shift as usize) / den
    } else {
        num / (den << (-shift) as usize)
    };
    let mantissa = scaled.to_f64().unwrap_or(f64::NAN);
    mantissa * 2f64.powi(-shift as i32)
}

/// `a/b` as an exact rational.
pub fn ratio(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// An integer as an exact rational.
pub fn int<I: Into<BigInt>>(v: I) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Exact rational value of a finite `f64` (every finite double is dyadic).
pub fn rational_from_f64(v: f64) -> Option<BigRational> {
    BigRational::from_float(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn huge_rationals_convert_accurately() {
        let big = BigInt::from(10).pow(400);
        let q = BigRational::new(big.clone() * 3, big * 7);
        assert!((rational_to_f64(&q) - 3.0 / 7.0).abs() < 1e-16);

        let tiny = BigRational::new(BigInt::from(1), BigInt::from(2).pow(80));
        assert_eq!(rational_to_f64(&tiny), 2f64.powi(-80));
        assert_eq!(rational_to_f64(&-ratio(1, 8)), -0.125);
    }

    #[test]
    fn dyadic_round_trip() {
        let v = 0.1_f64;
        let q = rational_from_f64(v).unwrap();
        assert_eq!(rational_to_f64(&q), v);
    }
}
