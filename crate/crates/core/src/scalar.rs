//! Coefficient fields.
//!
//! Everything in this crate is generic over a [`Field`] scalar. The only
//! instance shipped is arbitrary-precision rationals: zero-testing of
//! cohomology classes is meaningless under rounding, so floating point is
//! deliberately not implemented.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

/// A field of characteristic zero with exact arithmetic.
///
/// `from_ratio` must embed `num/den` exactly; division by a nonzero element
/// must be exact. Implementations with approximate arithmetic would break
/// every zero-test in the crate.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + 'static
{
    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Field for BigRational {
    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        BigRational::new(num.into(), den.into())
    }
}

/// The canonical coefficient field: arbitrary-precision rationals.
pub type Rat = BigRational;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_normalizes() {
        let a = Rat::from_ratio(2, 4);
        let b = Rat::from_ratio(1, 2);
        assert_eq!(a, b);
        assert_eq!(Rat::from_ratio(-3, -6), b);
    }

    #[test]
    fn inv_roundtrips() {
        let a = Rat::from_ratio(-7, 3);
        assert_eq!(a.clone() * a.inv(), Rat::one());
    }
}
