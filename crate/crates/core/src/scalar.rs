//! Scalar abstraction for the exact linear algebra.
//!
//! Everything in [`crate::intlin`] is written against [`IntScalar`], a
//! Euclidean-ring bound assembled from `num-traits`/`num-integer`. The
//! crate-level aliases fix it to [`num_bigint::BigInt`]; machine integers
//! also satisfy the bound and are handy in tests, but they overflow on the
//! matrix sizes used by the pipeline.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, NumAssignRef, NumRef, Signed, ToPrimitive};

/// An exact integer type usable as a matrix entry.
pub trait IntScalar:
    Integer
    + Signed
    + NumRef
    + NumAssignRef
    + Clone
    + Debug
    + Display
    + Hash
    + Default
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// Lossless conversion from a small constant.
    fn small(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("constant fits the scalar type")
    }
}

impl<T> IntScalar for T where
    T: Integer
        + Signed
        + NumRef
        + NumAssignRef
        + Clone
        + Debug
        + Display
        + Hash
        + Default
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Smallest nonnegative gcd of a sequence (0 for an empty or all-zero input).
pub fn gcd_all<'a, T: IntScalar>(values: impl IntoIterator<Item = &'a T>) -> T {
    let mut g = T::zero();
    for v in values {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    g
}
