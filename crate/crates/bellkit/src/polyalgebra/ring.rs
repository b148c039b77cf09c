//! Coefficient-ring abstraction shared by polynomials and truncated series.

use std::fmt;
use std::ops::{Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// An exact commutative ring usable as a coefficient domain.
///
/// Implemented for `BigInt`, `BigRational` and `Polynomial<C>`, so series
/// can carry plain rational coefficients or whole polynomials.
pub trait Ring:
    Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    /// Embeds a machine integer into the ring.
    fn from_int(value: i64) -> Self;
}

impl Ring for BigInt {
    fn from_int(value: i64) -> Self {
        BigInt::from(value)
    }
}

impl Ring for BigRational {
    fn from_int(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }
}
