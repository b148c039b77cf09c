//! Stirling numbers of the second kind by four independent routes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bell::{bell_closed_form, walk_binomial_nest};
use crate::comb::{binomial, factorial};
use crate::error::Error;

/// S(n, k) by the classical alternating sum
///
/// ```text
/// S(n, k) = 1/k! * sum over a = 0..=k of (-1)^(k-a) C(k, a) a^n,
/// ```
///
/// with S(0, 0) = 1 falling out of the 0^0 = 1 convention. Total over all
/// n, k >= 0; in particular S(n, k) = 0 for k > n. The divisibility of the
/// alternating sum by k! is asserted, not assumed.
pub fn stirling_explicit(n: u32, k: u32) -> BigInt {
    let mut sum = BigInt::zero();
    for a in 0..=k {
        let term = binomial(k, a) * BigInt::from(a).pow(n);
        if (k - a).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let (q, r) = sum.div_rem(&factorial(k));
    assert!(r.is_zero(), "alternating sum must be divisible by k!");
    q
}

/// S(n, k) by the nested binomial sum
///
/// ```text
/// S(n, k) = 1/k! * sum over the nest of C(n, a1) C(a1, a2) ... C(a_(k-2), a_(k-1)),
/// ```
///
/// the same index lattice as the closed-form Bell polynomial with every
/// variable weight replaced by one. Defined for k >= 2; the nest is empty
/// for n < k, giving zero.
pub fn stirling_nested(n: u32, k: u32) -> Result<BigInt, Error> {
    if k < 2 {
        return Err(Error::InvalidIndex {
            n,
            k,
            requires: "k >= 2 (S(n, 1) = 1 directly)",
        });
    }
    if n < k {
        return Ok(BigInt::zero());
    }
    let mut sum = BigInt::zero();
    walk_binomial_nest(n, k, &mut |_, chain| {
        sum += chain;
    });
    let (q, r) = sum.div_rem(&factorial(k));
    assert!(r.is_zero(), "nested sum must be divisible by k!");
    Ok(q)
}

/// S(n, k) for 2 <= k <= 6 by the dedicated closed forms
///
/// ```text
/// S(n, 2) = (2^n - 2) / 2
/// S(n, 3) = (3^n - 3*2^n + 3) / 6
/// S(n, 4) = (4^n - 4*3^n + 3*2^(n+1) - 4) / 24
/// S(n, 5) = (5^n - 5*4^n + 10*3^n - 10*2^n + 5) / 120
/// S(n, 6) = (6^n - 6*5^n + 15*4^n - 20*3^n + 15*2^n - 6) / 720
/// ```
pub fn stirling_closed_small(n: u32, k: u32) -> Result<BigInt, Error> {
    if !(2..=6).contains(&k) {
        return Err(Error::UnsupportedK { k });
    }
    if n < k {
        return Err(Error::InvalidIndex {
            n,
            k,
            requires: "n >= k",
        });
    }
    let p = |base: u32, exp: u32| BigInt::from(base).pow(exp);
    let c = BigInt::from;
    let numerator = match k {
        2 => p(2, n) - c(2),
        3 => p(3, n) - c(3) * p(2, n) + c(3),
        4 => p(4, n) - c(4) * p(3, n) + c(3) * p(2, n + 1) - c(4),
        5 => p(5, n) - c(5) * p(4, n) + c(10) * p(3, n) - c(10) * p(2, n) + c(5),
        6 => p(6, n) - c(6) * p(5, n) + c(15) * p(4, n) - c(20) * p(3, n) + c(15) * p(2, n) - c(6),
        _ => unreachable!(),
    };
    let (q, r) = numerator.div_rem(&factorial(k));
    assert!(r.is_zero(), "closed form numerator must be divisible by k!");
    Ok(q)
}

/// S(n, k) as the all-ones specialization of the Bell polynomial:
/// S(n, k) = B(n, k) at x1 = x2 = ... = 1.
pub fn stirling_from_bell(n: u32, k: u32) -> Result<BigInt, Error> {
    let b = bell_closed_form(n, k)?;
    let ones: BTreeMap<u32, BigRational> =
        (1..=n - k + 1).map(|v| (v, BigRational::one())).collect();
    let value = b.evaluate(&ones)?;
    debug_assert!(value.is_integer());
    Ok(value.to_integer())
}
