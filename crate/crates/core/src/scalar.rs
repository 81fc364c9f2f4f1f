//! The integer scalar abstraction shared by the sequence transforms.
//!
//! Every transform is written once against [`Scalar`] and instantiated for
//! [`num_bigint::BigInt`] (the default, overflow-free) or a fixed-width
//! machine integer such as `i64`/`i128`, where every step is checked and an
//! overflow is reported instead of wrapping.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer usable as a sequence term.
pub trait Scalar:
    Clone
    + Ord
    + Debug
    + Display
    + Integer
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
{
}

impl<T> Scalar for T where
    T: Clone
        + Ord
        + Debug
        + Display
        + Integer
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
{
}

/// Converts an index into the scalar type, `None` when it does not fit.
pub fn from_index<T: Scalar>(n: usize) -> Option<T> {
    T::from_usize(n)
}
