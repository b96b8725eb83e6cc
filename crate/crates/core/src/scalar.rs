//! Exact scalar types.
//!
//! Everything in this crate is exact: character values, class sizes, and
//! multiplicities are integers, and intermediate quantities are rationals
//! over the same integer type. Floating point types are deliberately not
//! admitted by [`ExactInt`].

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// An exact signed integer ring: `i64`, `i128` or `BigInt`.
///
/// Fixed-width types overflow near `n ≈ 20` (factorials); use them only for
/// small experiments.
pub trait ExactInt:
    Integer
    + Signed
    + Clone
    + Hash
    + FromPrimitive
    + ToPrimitive
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
}

impl<T> ExactInt for T where
    T: Integer
        + Signed
        + Clone
        + Hash
        + FromPrimitive
        + ToPrimitive
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}

pub fn int<T: ExactInt>(v: i64) -> T {
    T::from_i64(v).expect("integer literal fits the scalar type")
}

pub fn from_usize<T: ExactInt>(v: usize) -> T {
    T::from_usize(v).expect("usize fits the scalar type")
}

pub fn factorial<T: ExactInt>(n: usize) -> T {
    (2..=n).fold(T::one(), |acc, k| acc * from_usize::<T>(k))
}

pub fn binomial<T: ExactInt>(a: usize, b: usize) -> T {
    if b > a {
        return T::zero();
    }
    let b = b.min(a - b);
    let mut acc = T::one();
    for i in 0..b {
        acc = acc * from_usize::<T>(a - i) / from_usize::<T>(i + 1);
    }
    acc
}

/// `num / den`, failing unless the division is exact.
pub fn exact_div<T: ExactInt>(num: &T, den: &T) -> Result<T> {
    let (q, r) = num.div_rem(den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::Inexact(format!("{num} / {den}")))
    }
}

/// The integer value of a rational, failing when the denominator is not 1.
pub fn ratio_to_int<T: ExactInt>(r: &Ratio<T>) -> Result<T> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::Inexact(format!("{r} is not an integer")))
    }
}
