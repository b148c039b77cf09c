//! Truncated formal power series over an arbitrary coefficient ring.
//!
//! A series is a coefficient vector `[g0, g1, ..., gN]` for a fixed
//! truncation order N. All arithmetic is exact; products truncate to the
//! smaller of the two operand orders.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::polyalgebra::{Polynomial, Ring};

/// A formal power series known through order `coeffs.len() - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries<C: Ring> {
    coeffs: Vec<C>,
}

impl<C: Ring> TruncatedSeries<C> {
    /// Builds a series of the given truncation order from the supplied
    /// coefficients, padding with zeros or discarding the excess.
    pub fn new(order: usize, coeffs: Vec<C>) -> Self {
        let mut coeffs = coeffs;
        coeffs.truncate(order + 1);
        coeffs.resize_with(order + 1, C::zero);
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::new(order, vec![C::one()])
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of t^n; zero beyond the truncation order.
    pub fn coeff(&self, n: usize) -> C {
        self.coeffs.get(n).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.truncation_order().min(other.truncation_order());
        let coeffs = (0..=order)
            .map(|n| self.coeff(n) + other.coeff(n))
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.truncation_order().min(other.truncation_order());
        let coeffs = (0..=order)
            .map(|n| self.coeff(n) - other.coeff(n))
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn scale(&self, scalar: &C) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.clone() * scalar.clone())
                .collect(),
        }
    }

    /// Cauchy product, truncated to the smaller operand order.
    pub fn cauchy_product(&self, other: &Self) -> Self {
        let order = self.truncation_order().min(other.truncation_order());
        let mut coeffs = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Termwise derivative, one order shorter (a series of order 0
    /// differentiates to the zero series of order 0).
    pub fn derivative(&self) -> Self {
        if self.truncation_order() == 0 {
            return TruncatedSeries::zero(0);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c.clone() * C::from_int(n as i64))
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Nonnegative integer power by repeated squaring.
    pub fn direct_power(&self, exponent: u64) -> Self {
        let mut result = TruncatedSeries::one(self.truncation_order());
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = result.cauchy_product(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.cauchy_product(&base);
            }
        }
        result
    }
}

/// Exact rational nth root of a rational, if one exists.
fn rational_root(value: &BigRational, degree: u32) -> Option<BigRational> {
    debug_assert!(degree >= 1);
    if degree == 1 {
        return Some(value.clone());
    }
    if value.is_negative() && degree.is_multiple_of(2) {
        return None;
    }
    let numer = value.numer().nth_root(degree);
    let denom = value.denom().nth_root(degree);
    if &numer.pow(degree) == value.numer() && &denom.pow(degree) == value.denom() {
        Some(BigRational::new_raw(numer, denom))
    } else {
        None
    }
}

/// Exact rational power `base^(p/q)`, if the result is rational.
fn rational_pow(base: &BigRational, exponent: &BigRational) -> Option<BigRational> {
    let p = exponent.numer();
    let q = u32::try_from(exponent.denom()).ok()?;
    let root = rational_root(base, q)?;
    let p_mag = u32::try_from(p.magnitude()).ok()?;
    let powed = BigRational::new_raw(root.numer().pow(p_mag), root.denom().pow(p_mag));
    if p.is_negative() {
        if powed.is_zero() {
            return None;
        }
        Some(powed.recip())
    } else {
        Some(powed)
    }
}

impl TruncatedSeries<BigRational> {
    /// Raises a series with nonzero constant term to an arbitrary rational
    /// power k. Writing f = f0 + f1 t + ..., the coefficients of g = f^k
    /// satisfy
    ///
    /// ```text
    /// g0 = f0^k,
    /// gn = 1/(n f0) * sum over a = 1..=n of (a (k + 1) - n) f_a g_(n-a).
    /// ```
    ///
    /// Fails when f0 = 0 and when f0^k is not a rational number.
    pub fn power_coeffs_general(&self, k: &BigRational) -> Result<Self, Error> {
        let f0 = self.coeff(0);
        if f0.is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        let g0 = rational_pow(&f0, k).ok_or_else(|| Error::IrrationalPower {
            base: f0.to_string(),
            exponent: k.to_string(),
        })?;
        let order = self.truncation_order();
        let mut g = Vec::with_capacity(order + 1);
        g.push(g0);
        let k_plus_1 = k + BigRational::one();
        for n in 1..=order {
            let n_rat = BigRational::from_integer(BigInt::from(n));
            let mut sum = BigRational::zero();
            for a in 1..=n {
                let f_a = self.coeff(a);
                if f_a.is_zero() {
                    continue;
                }
                let a_rat = BigRational::from_integer(BigInt::from(a));
                sum += (&a_rat * &k_plus_1 - &n_rat) * f_a * &g[n - a];
            }
            g.push(sum / (&n_rat * &f0));
        }
        Ok(TruncatedSeries { coeffs: g })
    }
}

/// Division restricted to the exact quotients the power recurrences need:
/// rational division, and polynomial division by a single-term divisor.
pub trait ExactDiv: Sized {
    fn exact_div(&self, divisor: &Self) -> Result<Self, Error>;
}

impl ExactDiv for BigRational {
    fn exact_div(&self, divisor: &Self) -> Result<Self, Error> {
        if divisor.is_zero() {
            return Err(Error::ZeroFirstCoefficient);
        }
        Ok(self / divisor)
    }
}

impl ExactDiv for Polynomial<BigRational> {
    fn exact_div(&self, divisor: &Self) -> Result<Self, Error> {
        let mut divisor_terms = divisor.terms();
        let (dm, dc) = divisor_terms.next().ok_or(Error::ZeroFirstCoefficient)?;
        assert!(
            divisor_terms.next().is_none(),
            "exact_div divisor must be a single term"
        );
        let mut out = Polynomial::zero();
        for (m, c) in self.terms() {
            let q = m.checked_div(dm).ok_or_else(|| Error::NotDivisible {
                var: dm.iter().next().map_or(0, |(v, _)| v),
                term: m.to_string(),
            })?;
            out.add_assign_term(q, c / dc);
        }
        Ok(out)
    }
}

impl<C: Ring + ExactDiv> TruncatedSeries<C> {
    /// Raises a series with zero constant term and nonzero linear term to a
    /// positive integer power k. Writing f = f1 t + f2 t^2 + ..., the
    /// coefficients of g = f^k satisfy
    ///
    /// ```text
    /// g_k = f1^k,
    /// gn = 1/((n - k) f1) * sum over a = 1..=n-k of
    ///          ((a + 1)(k + 1) - (n + 1)) f_(a+1) g_(n-a),
    /// ```
    ///
    /// with gn = 0 for n < k. The divisions are exact in any coefficient
    /// ring that supports them, which is what lets this run unchanged over
    /// polynomial coefficients.
    pub fn power_coeffs_zero_constant(&self, k: u32) -> Result<Self, Error> {
        if k < 1 {
            return Err(Error::InvalidExponent { k });
        }
        if !self.coeff(0).is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let f1 = self.coeff(1);
        if f1.is_zero() {
            return Err(Error::ZeroFirstCoefficient);
        }
        let order = self.truncation_order();
        let k = k as usize;
        let mut g = vec![C::zero(); order + 1];
        if k > order {
            return Ok(TruncatedSeries { coeffs: g });
        }
        let mut f1_pow = C::one();
        for _ in 0..k {
            f1_pow = f1_pow * f1.clone();
        }
        g[k] = f1_pow;
        for n in k + 1..=order {
            let mut sum = C::zero();
            for a in 1..=n - k {
                let f_next = self.coeff(a + 1);
                if f_next.is_zero() {
                    continue;
                }
                let factor = C::from_int(((a + 1) * (k + 1)) as i64 - (n + 1) as i64);
                sum = sum + factor * f_next * g[n - a].clone();
            }
            let divisor = C::from_int((n - k) as i64) * f1.clone();
            g[n] = sum.exact_div(&divisor)?;
        }
        Ok(TruncatedSeries { coeffs: g })
    }
}
