//! Binary floating point with a fixed number of significand bits.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::IBig;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::Scalar;

type Float = FBig<HalfEven, 2>;

/// Real number rounded to `BITS` significand bits after every operation.
#[derive(Clone, PartialEq)]
pub struct Approx<const BITS: usize>(Float);

/// Default working precision.
pub type ApproxReal = Approx<256>;

fn to_ibig(v: &BigInt) -> IBig {
    IBig::from_le_bytes(&v.to_signed_bytes_le())
}

impl<const BITS: usize> Approx<BITS> {
    pub const PRECISION: usize = BITS;

    fn wrap(v: Float) -> Self {
        Self(v.with_precision(BITS).value())
    }

    pub fn from_f64(v: f64) -> Self {
        assert!(v.is_finite(), "non-finite value {v}");
        Self::wrap(Float::try_from(v).expect("finite"))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }

    pub fn abs(&self) -> Self {
        if self.0 < Float::ZERO {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }
}

impl<const BITS: usize> fmt::Debug for Approx<BITS> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.to_f64())
    }
}

impl<const BITS: usize> fmt::Display for Approx<BITS> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}

impl<const BITS: usize> PartialOrd for Approx<BITS> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

macro_rules! binary_op {
    ($trait:ident, $method:ident) => {
        impl<const BITS: usize> $trait for Approx<BITS> {
            type Output = Self;
            fn $method(self, rhs: Self) -> Self {
                Self::wrap($trait::$method(self.0, rhs.0))
            }
        }

        impl<const BITS: usize> $trait<&Approx<BITS>> for &Approx<BITS> {
            type Output = Approx<BITS>;
            fn $method(self, rhs: &Approx<BITS>) -> Approx<BITS> {
                Approx::wrap($trait::$method(&self.0, &rhs.0))
            }
        }
    };
}

binary_op!(Add, add);
binary_op!(Sub, sub);
binary_op!(Mul, mul);
binary_op!(Div, div);

impl<const BITS: usize> Neg for Approx<BITS> {
    type Output = Self;
    fn neg(self) -> Self {
        Self(-self.0)
    }
}

impl<const BITS: usize> Zero for Approx<BITS> {
    fn zero() -> Self {
        Self::wrap(Float::ZERO)
    }

    fn is_zero(&self) -> bool {
        self.0 == Float::ZERO
    }
}

impl<const BITS: usize> One for Approx<BITS> {
    fn one() -> Self {
        Self::wrap(Float::ONE)
    }
}

impl<const BITS: usize> Scalar for Approx<BITS> {
    fn from_i64(v: i64) -> Self {
        Self::wrap(Float::from(v))
    }

    fn from_rational(q: &BigRational) -> Self {
        let num = Self::wrap(Float::from(to_ibig(q.numer())));
        let den = Self::wrap(Float::from(to_ibig(q.denom())));
        num / den
    }

    fn magnitude(&self) -> f64 {
        self.to_f64().abs()
    }
}
