//! Exact integer helpers used throughout the crate.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient C(n, k) as an exact big integer.
///
/// Follows the generalized convention C(n, k) = 0 for k < 0 or k > n, so
/// alternating sums over a fixed index range need no manual clipping.
/// Negative n is rejected by the type.
pub fn binomial(n: u32, k: i64) -> BigInt {
    if k < 0 || k > i64::from(n) {
        return BigInt::zero();
    }
    let k = (k as u32).min(n - k as u32);
    let mut acc = BigInt::one();
    for i in 1..=k {
        // (n-k+i) keeps the running product divisible by i at every step
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// base^exp as an exact big integer.
pub fn int_pow(base: u32, exp: u32) -> BigInt {
    num_traits::pow::pow(BigInt::from(base), exp as usize)
}

/// 2^n as an exact big integer.
pub fn pow2(n: u32) -> BigInt {
    BigInt::one() << n
}
