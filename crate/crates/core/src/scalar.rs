//! Scalar abstractions shared by the numeric and exact layers.
//!
//! Numeric code (eigensolvers, projectors, interlacing checks) is written
//! against [`Real`], so it runs over `f32` or `f64`. Exact code (fraction-free
//! determinants) is written against [`IntegralDomain`], implemented for a
//! checked machine integer and for arbitrary-precision integers.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_bigint::BigInt;
use num_traits::{Float, FromPrimitive, One, ToPrimitive, Zero};

/// Real floating-point scalar usable by the numeric linear algebra.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + Debug + Display + Sum + Send + Sync + 'static
{
    /// Lossy conversion from `f64`; used for constants and tolerances.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 constant representable")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().expect("real scalar converts to f64")
    }
}

impl<T> Real for T where
    T: Float + FromPrimitive + ToPrimitive + Debug + Display + Sum + Send + Sync + 'static
{
}

/// Exact commutative ring without zero divisors, as needed by Bareiss
/// elimination. Operations return `None` on overflow so that a bounded
/// integer type can be tried first and abandoned for a wider one.
pub trait IntegralDomain: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn checked_mul(&self, rhs: &Self) -> Option<Self>;
    fn checked_sub(&self, rhs: &Self) -> Option<Self>;
    fn checked_neg(&self) -> Option<Self>;
    /// Division known to be exact.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
    fn into_bigint(self) -> BigInt;
}

impl IntegralDomain for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        i128::checked_mul(*self, *rhs)
    }
    fn checked_sub(&self, rhs: &Self) -> Option<Self> {
        i128::checked_sub(*self, *rhs)
    }
    fn checked_neg(&self) -> Option<Self> {
        i128::checked_neg(*self)
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        debug_assert_eq!(self % rhs, 0, "Bareiss division must be exact");
        i128::checked_div(*self, *rhs)
    }
    fn into_bigint(self) -> BigInt {
        BigInt::from(self)
    }
}

impl IntegralDomain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        Some(self * rhs)
    }
    fn checked_sub(&self, rhs: &Self) -> Option<Self> {
        Some(self - rhs)
    }
    fn checked_neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        Some(self / rhs)
    }
    fn into_bigint(self) -> BigInt {
        self
    }
}

/// A sign in `{+1, -1}`; serializes as the integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn as_f64(self) -> f64 {
        self.as_i64() as f64
    }

    pub fn from_f64(x: f64) -> Self {
        if x < 0.0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl serde::Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i64(self.as_i64())
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}
