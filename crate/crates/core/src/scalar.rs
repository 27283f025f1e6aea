//! Scalar abstraction for the exact integer arithmetic used across the crate.

use std::fmt;
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

/// Exact signed integer scalar.
///
/// The whole exact core (cyclotomic arithmetic, Hermite/Smith normal forms,
/// coset tables, classification) is generic over this trait. The shipping
/// instantiation is [`num_bigint::BigInt`], re-exported through the crate-root
/// aliases; `i64` is a valid instantiation for bounded work such as the
/// brute-force oracles in the test suites, where overflow checks stay active.
pub trait Scalar:
    Integer
    + Signed
    + Clone
    + Hash
    + From<i64>
    + ToPrimitive
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Clone
        + Hash
        + From<i64>
        + ToPrimitive
        + fmt::Debug
        + fmt::Display
        + Send
        + Sync
        + 'static
{
}
