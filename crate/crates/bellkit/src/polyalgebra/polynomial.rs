//! Sparse multivariate polynomials with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::polyalgebra::monomial::Monomial;
use crate::polyalgebra::ring::Ring;

/// A polynomial in x1, x2, x3, ... stored as a map from monomial to
/// coefficient. Zero coefficients are never stored, and the map's key order
/// is the canonical term order, so iteration yields terms exactly as they
/// are displayed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<C: Ring> {
    terms: BTreeMap<Monomial, C>,
}

/// Outcome of the degree check: every term has the same total degree, or not.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeCheck {
    Homogeneous(u64),
    Inhomogeneous,
}

/// Outcome of the weight check: every term has the same weight, or not.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightCheck {
    Isobaric(u64),
    Anisobaric,
}

impl<C: Ring> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(value: C) -> Self {
        let mut p = Polynomial::zero();
        p.add_assign_term(Monomial::one(), value);
        p
    }

    /// The single variable `x_index` with coefficient one.
    pub fn var(index: u32) -> Self {
        let mut p = Polynomial::zero();
        p.add_assign_term(Monomial::var(index), C::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(terms: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_assign_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    /// Coefficient of `monomial` (zero when absent).
    pub fn coeff(&self, monomial: &Monomial) -> C {
        self.terms.get(monomial).cloned().unwrap_or_else(C::zero)
    }

    /// Adds `coeff * monomial`, dropping the entry if the sum cancels.
    pub fn add_assign_term(&mut self, monomial: Monomial, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + coeff;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn mul_scalar(&self, scalar: &C) -> Self {
        if scalar.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.clone() * scalar.clone()))
                .collect(),
        }
    }

    /// Classifies the polynomial by total degree and by weight.
    /// Errors on the zero polynomial, which has neither.
    pub fn degree_weight(&self) -> Result<(DegreeCheck, WeightCheck), Error> {
        let mut terms = self.terms.keys();
        let first = terms.next().ok_or(Error::ZeroPolynomial)?;
        let (d0, w0) = (first.degree(), first.weight());
        let mut degree = DegreeCheck::Homogeneous(d0);
        let mut weight = WeightCheck::Isobaric(w0);
        for m in terms {
            if m.degree() != d0 {
                degree = DegreeCheck::Inhomogeneous;
            }
            if m.weight() != w0 {
                weight = WeightCheck::Anisobaric;
            }
        }
        Ok((degree, weight))
    }

    /// Divides every term by `x_var`. Fails on the first term that does not
    /// contain the variable.
    pub fn div_by_var(&self, var: u32) -> Result<Self, Error> {
        let mut quotient = Polynomial::zero();
        for (m, c) in &self.terms {
            let q = m.div_var(var).ok_or_else(|| Error::NotDivisible {
                var,
                term: m.to_string(),
            })?;
            quotient.add_assign_term(q, c.clone());
        }
        Ok(quotient)
    }
}

impl<C: Ring> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_assign_term(m.clone(), c.clone());
        }
        out
    }
}

impl<C: Ring> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_assign_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<C: Ring> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_assign_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Ring> Add for Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Polynomial<C>) -> Polynomial<C> {
        &self + &rhs
    }
}

impl<C: Ring> Sub for Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Polynomial<C>) -> Polynomial<C> {
        &self - &rhs
    }
}

impl<C: Ring> Mul for Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Polynomial<C>) -> Polynomial<C> {
        &self * &rhs
    }
}

impl<C: Ring> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<C: Ring> Zero for Polynomial<C> {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
}

impl<C: Ring> One for Polynomial<C> {
    fn one() -> Self {
        Polynomial::constant(C::one())
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .is_some_and(|c| c.clone().is_one())
    }
}

impl<C: Ring> Ring for Polynomial<C> {
    fn from_int(value: i64) -> Self {
        Polynomial::constant(C::from_int(value))
    }
}

impl Polynomial<BigInt> {
    /// Multiplies by an exact rational scalar; the result must again have
    /// integer coefficients.
    pub fn scale(&self, scalar: &BigRational) -> Result<Self, Error> {
        if scalar.is_zero() {
            return Ok(Polynomial::zero());
        }
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let scaled = scalar * BigRational::from_integer(c.clone());
            if !scaled.is_integer() {
                return Err(Error::NonIntegerResult {
                    coeff: scaled.to_string(),
                    monomial: m.to_string(),
                });
            }
            out.add_assign_term(m.clone(), scaled.to_integer());
        }
        Ok(out)
    }

    /// Evaluates at the given variable assignment. Every variable occurring
    /// in the polynomial must be assigned.
    pub fn evaluate(&self, values: &BTreeMap<u32, BigRational>) -> Result<BigRational, Error> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut prod = BigRational::from_integer(c.clone());
            for (var, exp) in m.iter() {
                let v = values.get(&var).ok_or(Error::MissingVariable { var })?;
                prod *= BigRational::new_raw(v.numer().pow(exp), v.denom().pow(exp));
            }
            total += prod;
        }
        Ok(total)
    }

    /// Widens the coefficients to rationals.
    pub fn to_rational(&self) -> Polynomial<BigRational> {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), BigRational::from_integer(c.clone())))
                .collect(),
        }
    }
}

impl Polynomial<BigRational> {
    /// Narrows the coefficients back to integers; fails on the first
    /// non-integer coefficient.
    pub fn into_integer(self) -> Result<Polynomial<BigInt>, Error> {
        let mut out = Polynomial::zero();
        for (m, c) in self.terms {
            if !c.is_integer() {
                return Err(Error::NonIntegerResult {
                    coeff: c.to_string(),
                    monomial: m.to_string(),
                });
            }
            out.add_assign_term(m, c.to_integer());
        }
        Ok(out)
    }
}

/// Canonical text form: terms in canonical order, `28*x1^6*x2 + ...`, with
/// unit coefficients omitted and negative terms joined by ` - `.
impl fmt::Display for Polynomial<BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let p = Polynomial::<BigInt>::var(1) + Polynomial::var(2);
        let q = Polynomial::<BigInt>::var(1) - Polynomial::var(2);
        let prod = &p * &q;
        // (x1 + x2)(x1 - x2) = x1^2 - x2^2; cross terms cancel.
        assert_eq!(prod.term_count(), 2);
        assert_eq!(prod.coeff(&Monomial::from_exponents([(1, 2)])), int(1));
        assert_eq!(prod.coeff(&Monomial::from_exponents([(2, 2)])), int(-1));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn degree_and_weight_classification() {
        // 4*x1*x3 + 3*x2^2: homogeneous of degree 2, isobaric of weight 4.
        let p = Polynomial::from_terms([
            (Monomial::from_exponents([(1, 1), (3, 1)]), int(4)),
            (Monomial::from_exponents([(2, 2)]), int(3)),
        ]);
        assert_eq!(
            p.degree_weight().unwrap(),
            (DegreeCheck::Homogeneous(2), WeightCheck::Isobaric(4))
        );

        let q = &p + &Polynomial::var(1);
        assert_eq!(
            q.degree_weight().unwrap(),
            (DegreeCheck::Inhomogeneous, WeightCheck::Anisobaric)
        );
        assert_eq!(
            Polynomial::<BigInt>::zero().degree_weight(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn div_by_var_requires_every_term() {
        let p = Polynomial::from_terms([
            (Monomial::from_exponents([(1, 2), (2, 1)]), int(3)),
            (Monomial::from_exponents([(1, 1), (3, 1)]), int(5)),
        ]);
        let q = p.div_by_var(1).unwrap();
        assert_eq!(
            q,
            Polynomial::from_terms([
                (Monomial::from_exponents([(1, 1), (2, 1)]), int(3)),
                (Monomial::from_exponents([(3, 1)]), int(5)),
            ])
        );
        let err = p.div_by_var(2).unwrap_err();
        assert_eq!(
            err,
            Error::NotDivisible {
                var: 2,
                term: "x1*x3".to_string()
            }
        );
    }

    #[test]
    fn scale_checks_integrality() {
        let p = Polynomial::from_terms([(Monomial::var(1), int(6)), (Monomial::var(2), int(9))]);
        let scaled = p.scale(&rat(1, 3)).unwrap();
        assert_eq!(scaled.coeff(&Monomial::var(1)), int(2));
        assert_eq!(scaled.coeff(&Monomial::var(2)), int(3));
        assert!(matches!(
            p.scale(&rat(1, 4)),
            Err(Error::NonIntegerResult { .. })
        ));
    }

    #[test]
    fn evaluate_exactly() {
        // 2*x1^2*x2 at x1 = 3/2, x2 = 4 gives 18.
        let p = Polynomial::from_terms([(Monomial::from_exponents([(1, 2), (2, 1)]), int(2))]);
        let mut values = BTreeMap::new();
        values.insert(1, rat(3, 2));
        values.insert(2, rat(4, 1));
        assert_eq!(p.evaluate(&values).unwrap(), rat(18, 1));
        values.remove(&2);
        assert_eq!(p.evaluate(&values), Err(Error::MissingVariable { var: 2 }));
    }

    #[test]
    fn rational_round_trip() {
        let p = Polynomial::from_terms([(Monomial::var(3), int(7))]);
        assert_eq!(p.to_rational().into_integer().unwrap(), p);
        let q = Polynomial::from_terms([(Monomial::var(1), rat(1, 2))]);
        assert!(matches!(
            q.into_integer(),
            Err(Error::NonIntegerResult { .. })
        ));
    }

    #[test]
    fn display_canonical_text() {
        assert_eq!(Polynomial::<BigInt>::zero().to_string(), "0");
        assert_eq!(Polynomial::<BigInt>::one().to_string(), "1");
        let p = Polynomial::from_terms([
            (Monomial::from_exponents([(1, 6), (2, 1)]), int(28)),
            (Monomial::from_exponents([(1, 7)]), int(1)),
        ]);
        assert_eq!(p.to_string(), "28*x1^6*x2 + x1^7");
        // x2 precedes x1: its x1-exponent is smaller.
        let q = Polynomial::from_terms([(Monomial::var(1), int(-2)), (Monomial::var(2), int(3))]);
        assert_eq!(q.to_string(), "3*x2 - 2*x1");
    }
}
