//! The release gate: eight numbered criteria covering golden values,
//! cross-algorithm agreement, structural invariants, series-power
//! equivalence, and benchmark determinism. Each test prints one pass line;
//! a panic from any assertion marks the criterion failed.
//!
//! Everything here is exact arithmetic, so every comparison is strict
//! equality with zero tolerance.

use std::process::Command;

use num_traits::{One, Signed};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use bellkit::comb::factorial;
use bellkit::{
    bell, bell_partition, bell_recurrence, enumerate_partitions, stirling_closed_small,
    stirling_explicit, stirling_nested, AlgorithmId, BigInt, BigRational, DegreeCheck, Polynomial,
    TruncatedSeries, WeightCheck,
};

/// Canonical text of B(n, 7) for n = 8..13, the values every algorithm
/// must hit bit for bit.
const GOLDEN_K7: [(u32, &str); 6] = [
    (8, "28*x1^6*x2"),
    (9, "378*x1^5*x2^2 + 84*x1^6*x3"),
    (10, "3150*x1^4*x2^3 + 2520*x1^5*x2*x3 + 210*x1^6*x4"),
    (
        11,
        "17325*x1^3*x2^4 + 34650*x1^4*x2^2*x3 + 4620*x1^5*x3^2 + 6930*x1^5*x2*x4 + 462*x1^6*x5",
    ),
    (
        12,
        "62370*x1^2*x2^5 + 277200*x1^3*x2^3*x3 + 138600*x1^4*x2*x3^2 + 103950*x1^4*x2^2*x4 \
         + 27720*x1^5*x3*x4 + 16632*x1^5*x2*x5 + 924*x1^6*x6",
    ),
    (
        13,
        "135135*x1*x2^6 + 1351350*x1^2*x2^4*x3 + 1801800*x1^3*x2^2*x3^2 + 900900*x1^3*x2^3*x4 \
         + 200200*x1^4*x3^3 + 900900*x1^4*x2*x3*x4 + 270270*x1^4*x2^2*x5 + 45045*x1^5*x4^2 \
         + 72072*x1^5*x3*x5 + 36036*x1^5*x2*x6 + 1716*x1^6*x7",
    ),
];

#[test]
fn criterion_1_golden_polynomials_bit_exact_under_all_five_algorithms() {
    for &(n, golden) in &GOLDEN_K7 {
        for algo in AlgorithmId::ALL {
            let p = bell(n, 7, algo).unwrap();
            assert_eq!(p.to_string(), golden, "B({n}, 7) via {algo}");
        }
    }
    let b13 = bell_partition(13, 7).unwrap();
    let mut coeffs: Vec<BigInt> = b13.terms().map(|(_, c)| c.clone()).collect();
    coeffs.sort();
    let mut expected: Vec<BigInt> = [
        135135, 1351350, 1801800, 200200, 900900, 900900, 45045, 270270, 72072, 36036, 1716,
    ]
    .iter()
    .map(|&c| BigInt::from(c))
    .collect();
    expected.sort();
    assert_eq!(coeffs, expected, "B(13, 7) coefficient multiset");
    println!("criterion 1: pass - six golden polynomials bit-exact under all five algorithms");
}

#[test]
fn criterion_2_five_way_agreement_for_k_up_to_n_up_to_20() {
    for n in 1..=20u32 {
        for k in 1..=n {
            let reference = bell_partition(n, k).unwrap();
            for algo in AlgorithmId::ALL {
                if algo == AlgorithmId::Partition {
                    continue;
                }
                assert_eq!(
                    bell(n, k, algo).unwrap(),
                    reference,
                    "({n}, {k}) via {algo}"
                );
            }
        }
    }
    println!("criterion 2: pass - five algorithms agree exactly for 1 <= k <= n <= 20");
}

#[test]
fn criterion_3_small_k_closed_forms_match_explicit_sum_up_to_n_25() {
    for k in 2..=6u32 {
        for n in k..=25 {
            assert_eq!(
                stirling_closed_small(n, k).unwrap(),
                stirling_explicit(n, k),
                "S({n}, {k})"
            );
        }
    }
    for n in 2..=25u32 {
        assert_eq!(
            stirling_closed_small(n, 2).unwrap(),
            BigInt::from(2).pow(n - 1) - BigInt::one(),
            "S({n}, 2) closed form"
        );
    }
    println!("criterion 3: pass - closed forms for k = 2..6 match the explicit sum up to n = 25");
}

#[test]
fn criterion_4_nested_sum_matches_explicit_sum_for_k_up_to_n_up_to_20() {
    for n in 2..=20u32 {
        for k in 2..=n {
            assert_eq!(
                stirling_nested(n, k).unwrap(),
                stirling_explicit(n, k),
                "S({n}, {k})"
            );
        }
    }
    println!(
        "criterion 4: pass - nested binomial sum matches the alternating sum for 2 <= k <= n <= 20"
    );
}

#[test]
fn criterion_5_structural_invariants_for_k_up_to_n_up_to_20() {
    for n in 1..=20u32 {
        for k in 1..=n {
            let p = bell_partition(n, k).unwrap();
            let (degree, weight) = p.degree_weight().unwrap();
            assert_eq!(degree, DegreeCheck::Homogeneous(u64::from(k)), "({n}, {k})");
            assert_eq!(weight, WeightCheck::Isobaric(u64::from(n)), "({n}, {k})");
            assert!(
                p.terms().all(|(_, c)| c.is_positive()),
                "({n}, {k}) coefficient positivity"
            );
            assert_eq!(
                p.term_count(),
                enumerate_partitions(n, k).unwrap().len(),
                "({n}, {k}) term count"
            );
            let sum: BigInt = p.terms().map(|(_, c)| c).sum();
            assert_eq!(sum, stirling_explicit(n, k), "({n}, {k}) coefficient sum");
        }
    }
    println!("criterion 5: pass - degree, weight, positivity, term count, and coefficient sum hold for 1 <= k <= n <= 20");
}

fn random_rational(rng: &mut StdRng, allow_zero: bool) -> BigRational {
    let numer = loop {
        let v: i64 = rng.gen_range(-9..=9);
        if allow_zero || v != 0 {
            break v;
        }
    };
    let denom: i64 = rng.gen_range(1..=9);
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Order-12 series; `zero_constant` selects the shape each power routine
/// expects (unit constant term versus vanishing constant term).
fn random_series(rng: &mut StdRng, zero_constant: bool) -> TruncatedSeries<BigRational> {
    const ORDER: usize = 12;
    let mut coeffs = Vec::with_capacity(ORDER + 1);
    for i in 0..=ORDER {
        let pinned_nonzero = if zero_constant { i == 1 } else { i == 0 };
        if zero_constant && i == 0 {
            coeffs.push(BigRational::from_integer(BigInt::from(0)));
        } else {
            coeffs.push(random_rational(rng, !pinned_nonzero));
        }
    }
    TruncatedSeries::new(ORDER, coeffs)
}

/// f * g' and k * f' * g, both known through order 11 once the derivative
/// drops one order.
fn log_derivative_sides(
    f: &TruncatedSeries<BigRational>,
    g: &TruncatedSeries<BigRational>,
    k: u64,
) -> (TruncatedSeries<BigRational>, TruncatedSeries<BigRational>) {
    let lhs = f.cauchy_product(&g.derivative());
    let rhs = f
        .derivative()
        .cauchy_product(g)
        .scale(&BigRational::from_integer(BigInt::from(k)));
    (lhs, rhs)
}

#[test]
fn criterion_6_series_powers_agree_on_a_random_rational_corpus() {
    let mut rng = StdRng::seed_from_u64(0xace50fbe11);
    let mut corpus_size = 0usize;

    for _ in 0..60 {
        let f = random_series(&mut rng, false);
        corpus_size += 1;
        for k in 1..=6u64 {
            let g = f
                .power_coeffs_general(&BigRational::from_integer(BigInt::from(k)))
                .unwrap();
            assert_eq!(g, f.direct_power(k), "general power, exponent {k}");
            let (lhs, rhs) = log_derivative_sides(&f, &g, k);
            assert_eq!(lhs, rhs, "log-derivative identity, exponent {k}");
        }
    }

    for _ in 0..60 {
        let f = random_series(&mut rng, true);
        corpus_size += 1;
        for k in 1..=6u32 {
            let g = f.power_coeffs_zero_constant(k).unwrap();
            assert_eq!(
                g,
                f.direct_power(u64::from(k)),
                "rooted power, exponent {k}"
            );
            let (lhs, rhs) = log_derivative_sides(&f, &g, u64::from(k));
            assert_eq!(lhs, rhs, "log-derivative identity (rooted), exponent {k}");
        }
    }

    assert!(corpus_size >= 100, "corpus holds {corpus_size} series");
    println!(
        "criterion 6: pass - both power routines match repeated multiplication and the \
         log-derivative identity on {corpus_size} random series"
    );
}

fn variable_series(n: u32) -> TruncatedSeries<Polynomial<BigRational>> {
    let mut coeffs = vec![Polynomial::<BigRational>::zero(); n as usize + 1];
    for m in 1..=n {
        coeffs[m as usize] =
            Polynomial::var(m).mul_scalar(&BigRational::new(BigInt::one(), factorial(m)));
    }
    TruncatedSeries::new(n as usize, coeffs)
}

#[test]
fn criterion_7_recurrence_matches_polynomial_series_extraction_up_to_n_15() {
    for n in 1..=15u32 {
        let f = variable_series(n);
        for k in 1..=n {
            let extracted = f
                .power_coeffs_zero_constant(k)
                .unwrap()
                .coeff(n as usize)
                .mul_scalar(&BigRational::new(factorial(n), factorial(k)))
                .into_integer()
                .unwrap();
            assert_eq!(extracted, bell_recurrence(n, k).unwrap(), "({n}, {k})");
        }
    }
    println!(
        "criterion 7: pass - the in-n recurrence equals series extraction over polynomial \
         coefficients for 1 <= k <= n <= 15"
    );
}

#[test]
fn criterion_8_bench_grid_is_deterministic_across_algorithms() {
    let out = Command::new(env!("CARGO_BIN_EXE_bellkit"))
        .args(["bench", "--max-n", "13", "--k-list", "7"])
        .output()
        .expect("binary should spawn");
    assert_eq!(out.status.code(), Some(0), "bench exit code");

    let stdout = String::from_utf8(out.stdout).expect("csv is utf-8");
    let mut lines = stdout.lines();
    assert_eq!(
        lines.next(),
        Some("n,k,algo,term_count,wall_time_ns,digest")
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 30, "six n values times five algorithms");

    for (expected_n, group) in (8..).zip(rows.chunks(5)) {
        for (row, algo) in group.iter().zip(AlgorithmId::ALL) {
            assert_eq!(row[0], expected_n.to_string());
            assert_eq!(row[1], "7");
            assert_eq!(row[2], algo.to_string());
            let wall: u128 = row[4].parse().expect("wall time is an integer");
            assert!(wall > 0, "wall time recorded for n = {expected_n}, {algo}");
        }
        assert!(
            group.iter().all(|row| row[5] == group[0][5]),
            "digests agree for n = {expected_n}"
        );
        assert!(
            group.iter().all(|row| row[3] == group[0][3]),
            "term counts agree for n = {expected_n}"
        );
    }
    println!(
        "criterion 8: pass - bench grid exits 0 with one digest per (n, k) and timings recorded"
    );
}
