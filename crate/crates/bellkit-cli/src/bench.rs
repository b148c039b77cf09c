//! The CSV benchmark grid behind `bellkit bench`.
//!
//! Rows cover every k in the requested list and every n with k < n <= max_n,
//! ordered by n, then k, then algorithm. Each row times one algorithm over
//! the requested repetitions and keeps the minimum wall time, which damps
//! scheduler noise. Rows run serially so timings do not contend with each
//! other. The digest column is the hex SHA-256 of the canonical text form;
//! all five rows of a (n, k) group must share one digest or the whole run
//! exits with code 1 after the CSV is printed.

use std::time::Instant;

use bellkit::{bell, AlgorithmId};

use crate::render;
use crate::Failure;

/// One timed computation: one CSV row.
struct ComputationReport {
    n: u32,
    k: u32,
    algo: AlgorithmId,
    term_count: usize,
    wall_time_ns: u128,
    digest: String,
}

impl ComputationReport {
    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.n, self.k, self.algo, self.term_count, self.wall_time_ns, self.digest
        )
    }
}

pub fn run(max_n: u32, k_list: &[u32], repetitions: u32) -> Result<(), Failure> {
    if let Some(bad) = k_list.iter().find(|&&k| k < 1) {
        return Err(Failure::usage(format!("k = {bad} is below 1")));
    }
    let mut ks = k_list.to_vec();
    ks.sort_unstable();
    ks.dedup();

    println!("n,k,algo,term_count,wall_time_ns,digest");
    let mut first_mismatch: Option<String> = None;
    for n in 2..=max_n {
        for &k in &ks {
            if k >= n {
                continue;
            }
            let mut group_digest: Option<String> = None;
            for algo in AlgorithmId::ALL {
                let report = time_one(n, k, algo, repetitions)?;
                println!("{}", report.csv_row());
                match &group_digest {
                    None => group_digest = Some(report.digest),
                    Some(expected) if *expected != report.digest && first_mismatch.is_none() => {
                        first_mismatch = Some(format!(
                            "digest mismatch at (n, k) = ({n}, {k}): {algo} gives {}, {} gives {expected}",
                            report.digest,
                            AlgorithmId::ALL[0],
                        ));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    match first_mismatch {
        Some(detail) => Err(Failure::internal(detail)),
        None => Ok(()),
    }
}

fn time_one(
    n: u32,
    k: u32,
    algo: AlgorithmId,
    repetitions: u32,
) -> Result<ComputationReport, Failure> {
    let mut best: Option<(u128, bellkit::Polynomial<bellkit::BigInt>)> = None;
    for _ in 0..repetitions {
        let start = Instant::now();
        let p = bell(n, k, algo).map_err(Failure::from_error)?;
        let elapsed = start.elapsed().as_nanos();
        if best.as_ref().is_none_or(|(t, _)| elapsed < *t) {
            best = Some((elapsed, p));
        }
    }
    let (wall_time_ns, p) = best.expect("repetitions >= 1 is enforced by the parser");
    Ok(ComputationReport {
        n,
        k,
        algo,
        term_count: p.term_count(),
        wall_time_ns,
        digest: render::digest(&p),
    })
}
