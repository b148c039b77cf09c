//! Exact computation of partial Bell polynomials and Stirling numbers of
//! the second kind, with several independent algorithms that can be played
//! against each other for verification.

pub mod bell;
pub mod comb;
mod error;
pub mod polyalgebra;
pub mod series;
pub mod stirling;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use bell::{
    bell, bell_closed_form, bell_convolution, bell_partition, bell_recurrence, bell_series_oracle,
    enumerate_partitions, AlgorithmId, Partition,
};
pub use error::Error;
pub use polyalgebra::{DegreeCheck, Monomial, Polynomial, Ring, WeightCheck};
pub use series::{ExactDiv, TruncatedSeries};
pub use stirling::{stirling_closed_small, stirling_explicit, stirling_from_bell, stirling_nested};
