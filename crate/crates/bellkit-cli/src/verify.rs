//! The cross-checking battery behind `bellkit verify`.
//!
//! Every pair 1 <= k <= n <= max_n runs seven independent checks: the five
//! Bell algorithms must agree term for term, the result must be homogeneous
//! of degree k and isobaric of weight n with positive coefficients, its term
//! count must equal the number of partitions of n into k parts, its
//! coefficient sum must equal S(n, k), and the four Stirling routes must
//! agree with each other. Pairs are evaluated in parallel; reporting stays
//! in deterministic index order.

use bellkit::{
    bell, bell_partition, enumerate_partitions, stirling_closed_small, stirling_explicit,
    stirling_from_bell, stirling_nested, AlgorithmId, BigInt, DegreeCheck, WeightCheck,
};
use num_traits::Signed;
use rayon::prelude::*;

use crate::Failure;

const CHECKS: [&str; 7] = [
    "five-way bell agreement",
    "homogeneity (degree = k)",
    "isobaricity (weight = n)",
    "coefficient positivity",
    "term count = partitions",
    "coefficient sum = S(n, k)",
    "four-way stirling agreement",
];

struct PairOutcome {
    n: u32,
    k: u32,
    /// Index into `CHECKS` plus a human-readable explanation.
    failures: Vec<(usize, String)>,
}

pub fn run(max_n: u32) -> Result<(), Failure> {
    let pairs: Vec<(u32, u32)> = (1..=max_n)
        .flat_map(|n| (1..=n).map(move |k| (n, k)))
        .collect();
    let outcomes: Vec<PairOutcome> = pairs.par_iter().map(|&(n, k)| evaluate(n, k)).collect();

    let mut failed = [false; CHECKS.len()];
    for outcome in &outcomes {
        for &(check, _) in &outcome.failures {
            failed[check] = true;
        }
    }

    println!("{:<28} {:>6}  result", "check", "cases");
    for (check, name) in CHECKS.iter().enumerate() {
        let result = if failed[check] { "FAIL" } else { "pass" };
        println!("{:<28} {:>6}  {}", name, pairs.len(), result);
    }

    let first = outcomes
        .iter()
        .find_map(|o| o.failures.first().map(|(c, d)| (o.n, o.k, *c, d)));
    if let Some((n, k, check, detail)) = first {
        println!();
        println!(
            "FAILED: {} of {} checks broke, first at (n, k) = ({n}, {k})",
            failed.iter().filter(|f| **f).count(),
            CHECKS.len(),
        );
        return Err(Failure::internal(format!(
            "{} at (n, k) = ({n}, {k}): {detail}",
            CHECKS[check]
        )));
    }
    println!();
    println!(
        "all {} checks passed for 1 <= k <= n <= {max_n}",
        CHECKS.len()
    );
    Ok(())
}

fn evaluate(n: u32, k: u32) -> PairOutcome {
    let mut failures = Vec::new();

    let reference = match bell_partition(n, k) {
        Ok(p) => p,
        Err(err) => {
            failures.push((0, format!("partition algorithm failed: {err}")));
            return PairOutcome { n, k, failures };
        }
    };

    for algo in AlgorithmId::ALL {
        if algo == AlgorithmId::Partition {
            continue;
        }
        match bell(n, k, algo) {
            Ok(p) if p == reference => {}
            Ok(p) => failures.push((
                0,
                format!("{algo} disagrees with partition: {p} versus {reference}"),
            )),
            Err(err) => failures.push((0, format!("{algo} failed: {err}"))),
        }
    }

    match reference.degree_weight() {
        Ok((degree, weight)) => {
            if degree != DegreeCheck::Homogeneous(u64::from(k)) {
                failures.push((1, format!("degree of {reference} is not uniformly {k}")));
            }
            if weight != WeightCheck::Isobaric(u64::from(n)) {
                failures.push((2, format!("weight of {reference} is not uniformly {n}")));
            }
        }
        Err(err) => {
            failures.push((1, format!("degree/weight scan failed: {err}")));
        }
    }

    if let Some((monomial, coeff)) = reference.terms().find(|(_, c)| !c.is_positive()) {
        failures.push((
            3,
            format!("coefficient {coeff} of {monomial} is not positive"),
        ));
    }

    match enumerate_partitions(n, k) {
        Ok(partitions) => {
            if reference.term_count() != partitions.len() {
                failures.push((
                    4,
                    format!(
                        "{} terms but {} partitions of {n} into {k} parts",
                        reference.term_count(),
                        partitions.len()
                    ),
                ));
            }
        }
        Err(err) => failures.push((4, format!("partition enumeration failed: {err}"))),
    }

    let coeff_sum: BigInt = reference.terms().map(|(_, c)| c).sum();
    let stirling = stirling_explicit(n, k);
    if coeff_sum != stirling {
        failures.push((
            5,
            format!("coefficient sum {coeff_sum} differs from S({n}, {k}) = {stirling}"),
        ));
    }

    if k >= 2 {
        match stirling_nested(n, k) {
            Ok(v) if v == stirling => {}
            Ok(v) => failures.push((6, format!("nested gives {v}, explicit gives {stirling}"))),
            Err(err) => failures.push((6, format!("nested method failed: {err}"))),
        }
    }
    if (2..=6).contains(&k) {
        match stirling_closed_small(n, k) {
            Ok(v) if v == stirling => {}
            Ok(v) => failures.push((
                6,
                format!("closed_small gives {v}, explicit gives {stirling}"),
            )),
            Err(err) => failures.push((6, format!("closed_small method failed: {err}"))),
        }
    }
    match stirling_from_bell(n, k) {
        Ok(v) if v == stirling => {}
        Ok(v) => failures.push((6, format!("from_bell gives {v}, explicit gives {stirling}"))),
        Err(err) => failures.push((6, format!("from_bell method failed: {err}"))),
    }

    PairOutcome { n, k, failures }
}
