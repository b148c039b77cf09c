//! Sparse monomials in the variables x1, x2, x3, ...

use std::cmp::Ordering;
use std::fmt;

/// A power product `x1^l1 * x2^l2 * ...` stored sparsely.
///
/// Variable indices are 1-based. Only nonzero exponents are stored, sorted
/// by variable index, so structural equality coincides with mathematical
/// equality. The empty monomial is the multiplicative unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    /// `(variable index, exponent)` pairs, ascending by index, exponents > 0.
    exponents: Vec<(u32, u32)>,
}

impl Monomial {
    /// The unit monomial (no variables).
    pub fn one() -> Self {
        Monomial {
            exponents: Vec::new(),
        }
    }

    /// The single variable `x_index`. Indices are 1-based.
    pub fn var(index: u32) -> Self {
        assert!(index >= 1, "variable indices are 1-based");
        Monomial {
            exponents: vec![(index, 1)],
        }
    }

    /// Builds a monomial from `(variable, exponent)` pairs in any order;
    /// duplicate variables accumulate and zero exponents are dropped.
    pub fn from_exponents<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut exponents: Vec<(u32, u32)> = Vec::new();
        for (var, exp) in pairs {
            assert!(var >= 1, "variable indices are 1-based");
            if exp == 0 {
                continue;
            }
            match exponents.iter_mut().find(|(v, _)| *v == var) {
                Some((_, e)) => *e += exp,
                None => exponents.push((var, exp)),
            }
        }
        exponents.sort_unstable_by_key(|&(v, _)| v);
        Monomial { exponents }
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Exponent of `x_var` (zero when absent).
    pub fn exponent(&self, var: u32) -> u32 {
        self.exponents
            .iter()
            .find(|&&(v, _)| v == var)
            .map_or(0, |&(_, e)| e)
    }

    /// Iterates `(variable, exponent)` pairs in ascending variable order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.exponents.iter().copied()
    }

    /// Total degree: the sum of all exponents.
    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&(_, e)| e as u64).sum()
    }

    /// Weight: the index-weighted exponent sum `sum(var * exp)`.
    pub fn weight(&self) -> u64 {
        self.exponents
            .iter()
            .map(|&(v, e)| v as u64 * e as u64)
            .sum()
    }

    /// Product of two monomials (exponents add).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exponents = Vec::with_capacity(self.exponents.len() + other.exponents.len());
        let mut a = self.exponents.iter().peekable();
        let mut b = other.exponents.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        exponents.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        exponents.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        exponents.push((va, ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&p), None) => {
                    exponents.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    exponents.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { exponents }
    }

    /// Divides by `x_var` once; `None` if the variable is absent.
    pub fn div_var(&self, var: u32) -> Option<Monomial> {
        let pos = self.exponents.iter().position(|&(v, _)| v == var)?;
        let mut exponents = self.exponents.clone();
        if exponents[pos].1 == 1 {
            exponents.remove(pos);
        } else {
            exponents[pos].1 -= 1;
        }
        Some(Monomial { exponents })
    }

    /// Exact quotient `self / other`; `None` if any exponent would go negative.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exponents = Vec::with_capacity(self.exponents.len());
        let mut rest = self.exponents.iter().copied().peekable();
        for &(var, exp) in &other.exponents {
            loop {
                let &(v, e) = rest.peek()?;
                if v < var {
                    exponents.push((v, e));
                    rest.next();
                } else if v == var {
                    if e < exp {
                        return None;
                    }
                    if e > exp {
                        exponents.push((v, e - exp));
                    }
                    rest.next();
                    break;
                } else {
                    return None;
                }
            }
        }
        exponents.extend(rest);
        Some(Monomial { exponents })
    }
}

/// Canonical term order: ascending exponent of x1, ties broken by ascending
/// exponent of x2, and so on. This is the order used for display and
/// serialization throughout the crate.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.exponents.iter();
        let mut b = other.exponents.iter();
        let (mut pa, mut pb) = (a.next(), b.next());
        loop {
            match (pa, pb) {
                (None, None) => return Ordering::Equal,
                // A variable present on one side only: that side has the
                // larger exponent at the first differing variable.
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        pa = a.next();
                        pb = b.next();
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(var, exp) in &self.exponents {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if exp == 1 {
                write!(f, "x{var}")?;
            } else {
                write!(f, "x{var}^{exp}")?;
            }
        }
        Ok(())
    }
}
