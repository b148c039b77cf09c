//! Exact sparse polynomial arithmetic over big integers and big rationals.

mod monomial;
mod polynomial;
mod ring;

pub use monomial::Monomial;
pub use polynomial::{DegreeCheck, Polynomial, WeightCheck};
pub use ring::Ring;
