//! Partial Bell polynomials B(n, k) in the variables x1, x2, ...
//!
//! Five independent algorithms produce the same polynomial: a direct sum
//! over partitions, a recurrence in n, a binomial convolution that splits
//! the order k, a closed-form nested sum, and a formal power series
//! expansion. Their mutual agreement is the crate's main correctness
//! argument, exercised by the verification suite.

mod nest;
mod partitions;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::comb::{binomial, factorial};
use crate::error::Error;
use crate::polyalgebra::{Monomial, Polynomial};
use crate::series::TruncatedSeries;

pub(crate) use nest::walk_binomial_nest;
pub use partitions::{enumerate_partitions, Partition};

/// Identifies one of the five computation strategies. The names are stable
/// and appear verbatim in CLI arguments and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgorithmId {
    Partition,
    Recurrence,
    Convolution,
    ClosedForm,
    SeriesOracle,
}

impl AlgorithmId {
    /// Every algorithm, in canonical report order.
    pub const ALL: [AlgorithmId; 5] = [
        AlgorithmId::Partition,
        AlgorithmId::Recurrence,
        AlgorithmId::Convolution,
        AlgorithmId::ClosedForm,
        AlgorithmId::SeriesOracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgorithmId::Partition => "partition",
            AlgorithmId::Recurrence => "recurrence",
            AlgorithmId::Convolution => "convolution",
            AlgorithmId::ClosedForm => "closed_form",
            AlgorithmId::SeriesOracle => "series_oracle",
        }
    }
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgorithmId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        AlgorithmId::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::UnknownAlgorithm {
                name: s.to_string(),
            })
    }
}

fn check_index(n: u32, k: u32, requires: &'static str, valid: bool) -> Result<(), Error> {
    if valid {
        Ok(())
    } else {
        Err(Error::InvalidIndex { n, k, requires })
    }
}

/// B(n, k) as the sum over all partitions of n into exactly k parts, each
/// partition with multiplicities (l1, ..., lm) contributing
///
/// ```text
/// n! / (l1! ... lm!) * prod over a of (x_a / a!)^(l_a).
/// ```
pub fn bell_partition(n: u32, k: u32) -> Result<Polynomial<BigInt>, Error> {
    let parts = enumerate_partitions(n, k)?;
    let n_fact = factorial(n);
    let mut out = Polynomial::zero();
    for p in &parts {
        let mut den = BigInt::one();
        for (i, &l) in p.counts().iter().enumerate() {
            if l == 0 {
                continue;
            }
            let a = i as u32 + 1;
            den *= factorial(l) * factorial(a).pow(l);
        }
        let (q, r) = n_fact.div_rem(&den);
        assert!(r.is_zero(), "partition weight must divide n!");
        out.add_assign_term(p.monomial(), q);
    }
    Ok(out)
}

/// B(n, k) by the recurrence in n at fixed k:
///
/// ```text
/// B(k, k) = x1^k,
/// B(n, k) = 1/x1 * 1/(n - k) * sum over a = 1..=n-k of
///               C(n, a) ((k + 1) - (n + 1)/(a + 1)) x_(a+1) B(n-a, k).
/// ```
///
/// The bracket is a genuine rational, so each level is accumulated over
/// rational coefficients and asserted integral once the division by x1 and
/// by (n - k) has been applied. Levels k..=n are cached for the duration
/// of the call.
pub fn bell_recurrence(n: u32, k: u32) -> Result<Polynomial<BigInt>, Error> {
    check_index(n, k, "n >= k >= 1", k >= 1 && k <= n)?;
    let base = Polynomial::from_terms([(Monomial::from_exponents([(1, k)]), BigInt::one())]);
    let mut levels: Vec<Polynomial<BigInt>> = vec![base];
    for m in k + 1..=n {
        let mut sum = Polynomial::<BigRational>::zero();
        for a in 1..=m - k {
            let bracket = BigRational::from_integer(BigInt::from(k + 1))
                - BigRational::new(BigInt::from(m + 1), BigInt::from(a + 1));
            let factor = bracket * BigRational::from_integer(binomial(m, a));
            if factor.is_zero() {
                continue;
            }
            let prior = levels[(m - a - k) as usize].to_rational();
            let shifted = &prior * &Polynomial::var(a + 1);
            sum = sum + shifted.mul_scalar(&factor);
        }
        let divided = sum.div_by_var(1)?;
        let scaled = divided.mul_scalar(&BigRational::new(BigInt::one(), BigInt::from(m - k)));
        levels.push(scaled.into_integer()?);
    }
    Ok(levels.pop().expect("at least the base level exists"))
}

/// B(n, k1 + k2) by the binomial convolution
///
/// ```text
/// B(n, k1 + k2) = k1! k2! / (k1 + k2)! *
///     sum over a = 0..=n of C(n, a) B(a, k1) B(n-a, k2),
/// ```
///
/// with boundary values B(0, 0) = 1, B(m, 1) = x_m, and B(a, j) = 0 for
/// a < j. Inner Bell polynomials are computed by the same convolution with
/// split (j - 1, 1) and cached for the duration of the call.
pub fn bell_convolution(n: u32, k: u32, split: (u32, u32)) -> Result<Polynomial<BigInt>, Error> {
    check_index(n, k, "n >= k >= 2", k >= 2 && k <= n)?;
    let (k1, k2) = split;
    if k1 + k2 != k || k1 < 1 || k2 < 1 {
        return Err(Error::InvalidSplit { k1, k2, k });
    }
    let mut cache = HashMap::new();
    convolve(n, k1, k2, &mut cache)
}

type BellCache = HashMap<(u32, u32), Polynomial<BigInt>>;

fn convolve(n: u32, k1: u32, k2: u32, cache: &mut BellCache) -> Result<Polynomial<BigInt>, Error> {
    let k = k1 + k2;
    let mut sum = Polynomial::<BigInt>::zero();
    // Terms with a < k1 or n - a < k2 vanish by the boundary rules.
    for a in k1..=n - k2 {
        let left = boundary_bell(a, k1, cache)?;
        let right = boundary_bell(n - a, k2, cache)?;
        sum = sum + (&left * &right).mul_scalar(&binomial(n, a));
    }
    let scale = BigRational::new(factorial(k1) * factorial(k2), factorial(k));
    sum.scale(&scale)
}

fn boundary_bell(m: u32, j: u32, cache: &mut BellCache) -> Result<Polynomial<BigInt>, Error> {
    if j > m {
        return Ok(Polynomial::zero());
    }
    if j == 0 {
        // Only reachable with m = 0 here; B(0, 0) = 1.
        return Ok(Polynomial::one());
    }
    if j == 1 {
        return Ok(Polynomial::var(m));
    }
    if let Some(hit) = cache.get(&(m, j)) {
        return Ok(hit.clone());
    }
    let value = convolve(m, j - 1, 1, cache)?;
    cache.insert((m, j), value.clone());
    Ok(value)
}

/// B(n, k) by the closed-form (k-1)-fold nested sum
///
/// ```text
/// B(n, k) = 1/k! * sum over the nest of
///     C(n, a1) C(a1, a2) ... x_(n-a1) x_(a1-a2) ... x_(a_(k-1)),
/// ```
///
/// with B(n, 1) = x_n as the stated base. The nest collapses to the single
/// point (k-1, k-2, ..., 1) at n = k, giving x1^k.
pub fn bell_closed_form(n: u32, k: u32) -> Result<Polynomial<BigInt>, Error> {
    check_index(n, k, "n >= k >= 1", k >= 1 && k <= n)?;
    if k == 1 {
        return Ok(Polynomial::var(n));
    }
    let mut sum = Polynomial::<BigInt>::zero();
    walk_binomial_nest(n, k, &mut |indices, chain| {
        let mut factors = Vec::with_capacity(indices.len() + 1);
        let mut prev = n;
        for &a in indices {
            factors.push((prev - a, 1));
            prev = a;
        }
        factors.push((prev, 1));
        sum.add_assign_term(Monomial::from_exponents(factors), chain.clone());
    });
    sum.scale(&BigRational::new(BigInt::one(), factorial(k)))
}

/// B(n, k) read off a formal power series: with
/// f(t) = sum over m = 1..=n of x_m t^m / m!, the coefficient of t^n in
/// f(t)^k, times n!/k!, is B(n, k). The series runs over polynomial-valued
/// coefficients, so the extraction is exact.
///
/// The empty product at k = 0 yields B(0, 0) = 1 and B(n, 0) = 0 for
/// n >= 1.
pub fn bell_series_oracle(n: u32, k: u32) -> Result<Polynomial<BigInt>, Error> {
    check_index(n, k, "n >= k >= 0", k <= n)?;
    let order = n as usize;
    let mut coeffs = vec![Polynomial::<BigRational>::zero(); order + 1];
    for m in 1..=n {
        coeffs[m as usize] =
            Polynomial::var(m).mul_scalar(&BigRational::new(BigInt::one(), factorial(m)));
    }
    let f = TruncatedSeries::new(order, coeffs);
    let g = f.direct_power(k as u64);
    let scale = BigRational::new(factorial(n), factorial(k));
    g.coeff(order).mul_scalar(&scale).into_integer()
}

/// Dispatches to the chosen algorithm. Convolution uses the default split
/// (k - 1, 1) and falls back to the boundary value B(n, 1) = x_n at k = 1
/// so that every algorithm agrees on the full region n >= k >= 1.
pub fn bell(n: u32, k: u32, algo: AlgorithmId) -> Result<Polynomial<BigInt>, Error> {
    match algo {
        AlgorithmId::Partition => bell_partition(n, k),
        AlgorithmId::Recurrence => bell_recurrence(n, k),
        AlgorithmId::Convolution => match k {
            0 => Err(Error::InvalidIndex {
                n,
                k,
                requires: "n >= k >= 1",
            }),
            1 => {
                check_index(n, k, "n >= k >= 1", n >= 1)?;
                Ok(Polynomial::var(n))
            }
            _ => bell_convolution(n, k, (k - 1, 1)),
        },
        AlgorithmId::ClosedForm => bell_closed_form(n, k),
        AlgorithmId::SeriesOracle => bell_series_oracle(n, k),
    }
}
