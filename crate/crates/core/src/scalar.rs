//! Count types the denumerant engine is generic over.
//!
//! Representation counts grow like a polynomial of degree `k - 1` in the
//! target, so fixed-width counters overflow eventually. Every addition goes
//! through [`CheckedAdd`] and an overflow surfaces as [`FrobError::Overflow`].
//!
//! [`FrobError::Overflow`]: crate::FrobError::Overflow

use std::fmt::{Debug, Display};

use num_bigint::BigUint;
use num_traits::{CheckedAdd, FromPrimitive, One, ToPrimitive, Zero};

/// An exact, nonnegative counter.
pub trait Count:
    Clone + Debug + Display + Ord + Zero + One + CheckedAdd + FromPrimitive + ToPrimitive + Send + Sync
{
    /// Lossless conversion from a small count.
    fn of(value: u64) -> Self {
        <Self as FromPrimitive>::from_u64(value).expect("every Count holds u64 values")
    }
}

impl Count for u64 {}
impl Count for u128 {}
impl Count for BigUint {}

/// Checked `i64` helpers shared by the closed-form operations.
pub(crate) fn to_i64(value: u64, what: &'static str) -> crate::Result<i64> {
    i64::try_from(value).map_err(|_| crate::FrobError::Overflow(what))
}
