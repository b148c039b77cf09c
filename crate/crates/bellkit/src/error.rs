//! Error type shared by all modules of the crate.

use std::fmt;

/// Everything that can go wrong in exact Bell/Stirling computations.
///
/// The variants split into two groups: usage errors (an index or exponent
/// outside an algorithm's domain) and internal-consistency errors that are
/// never expected to fire on valid inputs. The latter carry enough context
/// to diagnose the failing intermediate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A rational scaling of an integer polynomial produced a non-integer
    /// coefficient. All Bell intermediates scale to integers, so this
    /// signals an algebra bug upstream.
    NonIntegerResult { coeff: String, monomial: String },
    /// Exact division by a variable (or a single-term divisor) failed
    /// because some term lacks the required factor.
    NotDivisible { var: u32, term: String },
    /// Polynomial evaluation hit a variable with no assigned value.
    MissingVariable { var: u32 },
    /// Degree/weight inspection of the zero polynomial.
    ZeroPolynomial,
    /// An `(n, k)` pair outside the domain of the requested algorithm.
    InvalidIndex {
        n: u32,
        k: u32,
        requires: &'static str,
    },
    /// A convolution split `(k1, k2)` that does not partition `k`.
    InvalidSplit { k1: u32, k2: u32, k: u32 },
    /// The general power recurrence needs a nonzero constant coefficient.
    ZeroLeadingCoefficient,
    /// The zero-constant power recurrence was given a series whose
    /// constant coefficient is not zero; use the general form instead.
    NonzeroConstantTerm,
    /// The zero-constant power recurrence needs a nonzero first
    /// coefficient to divide by.
    ZeroFirstCoefficient,
    /// The zero-constant power recurrence needs an exponent k >= 1.
    InvalidExponent { k: u32 },
    /// Raising the constant coefficient to a rational power has no exact
    /// rational value.
    IrrationalPower { base: String, exponent: String },
    /// The small-k closed forms cover k = 2..6 only.
    UnsupportedK { k: u32 },
    /// An algorithm name that is not one of the five stable names.
    UnknownAlgorithm { name: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonIntegerResult { coeff, monomial } => write!(
                f,
                "non-integer coefficient {coeff} on {monomial} where an integer was required"
            ),
            Error::NotDivisible { var, term } => {
                write!(f, "term {term} is not divisible by x{var}")
            }
            Error::MissingVariable { var } => {
                write!(f, "no value assigned to variable x{var}")
            }
            Error::ZeroPolynomial => write!(f, "degree/weight of the zero polynomial"),
            Error::InvalidIndex { n, k, requires } => {
                write!(f, "invalid index (n, k) = ({n}, {k}): requires {requires}")
            }
            Error::InvalidSplit { k1, k2, k } => {
                write!(
                    f,
                    "invalid split ({k1}, {k2}) of k = {k}: need k1 + k2 = k with k1, k2 >= 1"
                )
            }
            Error::ZeroLeadingCoefficient => {
                write!(
                    f,
                    "general power recurrence requires a nonzero constant coefficient"
                )
            }
            Error::NonzeroConstantTerm => {
                write!(
                    f,
                    "zero-constant power recurrence requires constant coefficient 0"
                )
            }
            Error::ZeroFirstCoefficient => {
                write!(
                    f,
                    "zero-constant power recurrence requires a nonzero first coefficient"
                )
            }
            Error::InvalidExponent { k } => {
                write!(
                    f,
                    "zero-constant power recurrence requires exponent k >= 1, got {k}"
                )
            }
            Error::IrrationalPower { base, exponent } => {
                write!(f, "{base}^{exponent} is not an exact rational")
            }
            Error::UnsupportedK { k } => {
                write!(f, "no small-k closed form for k = {k} (supported: 2..=6)")
            }
            Error::UnknownAlgorithm { name } => {
                write!(f, "unknown algorithm '{name}' (expected one of: partition, recurrence, convolution, closed_form, series_oracle)")
            }
        }
    }
}

impl std::error::Error for Error {}
