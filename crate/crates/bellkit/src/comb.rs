//! Exact factorials and binomial coefficients.

use num_bigint::BigInt;

/// n! as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::from(1u32);
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Binomial coefficient C(n, k); zero for k > n.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0u32);
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}
