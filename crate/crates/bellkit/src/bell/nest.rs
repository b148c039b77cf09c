//! Walker for the nested binomial sums shared by the closed-form Bell
//! polynomial and the nested Stirling formula.

use num_bigint::BigInt;
use num_traits::One;

/// Walks the (k-1)-deep index lattice
///
/// ```text
/// a1 in [k-1, n-1],  a2 in [k-2, a1-1],  ...,  a_(k-1) in [1, a_(k-2)-1]
/// ```
///
/// calling `visit` once per lattice point with the index vector and the
/// binomial chain `C(n, a1) C(a1, a2) ... C(a_(k-2), a_(k-1))`. The depth
/// is data-dependent, so the nest is realized by recursion over levels
/// rather than literal loops. Callers attach their own per-point weight.
///
/// The lattice has C(n-1, k-1) points, so the per-point work matters:
/// binomials come from a Pascal triangle built once per walk.
pub(crate) fn walk_binomial_nest<F: FnMut(&[u32], &BigInt)>(n: u32, k: u32, visit: &mut F) {
    debug_assert!(k >= 2 && n >= 1);
    let depth = (k - 1) as usize;
    let mut indices = vec![0u32; depth];
    let pascal = pascal_rows(n);
    descend(0, k, n, BigInt::one(), &pascal, &mut indices, visit);
}

/// Rows 0..=n of Pascal's triangle.
fn pascal_rows(n: u32) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n as usize + 1);
    rows.push(vec![BigInt::one()]);
    for r in 1..=n as usize {
        let prev = &rows[r - 1];
        let mut row = Vec::with_capacity(r + 1);
        row.push(BigInt::one());
        for c in 1..r {
            row.push(&prev[c - 1] + &prev[c]);
        }
        row.push(BigInt::one());
        rows.push(row);
    }
    rows
}

#[allow(clippy::too_many_arguments)]
fn descend<F: FnMut(&[u32], &BigInt)>(
    level: usize,
    k: u32,
    prev: u32,
    chain: BigInt,
    pascal: &[Vec<BigInt>],
    indices: &mut [u32],
    visit: &mut F,
) {
    if level == indices.len() {
        visit(indices, &chain);
        return;
    }
    // Level j = level + 1 ranges over [k - j, prev - 1].
    let lo = k - 1 - level as u32;
    for a in lo..prev {
        indices[level] = a;
        let next = &chain * &pascal[prev as usize][a as usize];
        descend(level + 1, k, a, next, pascal, indices, visit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lattice(n: u32, k: u32) -> Vec<(Vec<u32>, BigInt)> {
        let mut out = Vec::new();
        walk_binomial_nest(n, k, &mut |idx, chain| {
            out.push((idx.to_vec(), chain.clone()));
        });
        out
    }

    #[test]
    fn depth_one_lattice() {
        // k = 2: a1 runs over [1, n-1] with chain C(n, a1).
        let points = lattice(4, 2);
        assert_eq!(
            points,
            vec![
                (vec![1], BigInt::from(4)),
                (vec![2], BigInt::from(6)),
                (vec![3], BigInt::from(4)),
            ]
        );
    }

    #[test]
    fn depth_two_lattice() {
        // (n, k) = (4, 3): a1 in [2, 3], a2 in [1, a1 - 1].
        let points = lattice(4, 3);
        assert_eq!(
            points,
            vec![
                (vec![2, 1], BigInt::from(12)),
                (vec![3, 1], BigInt::from(12)),
                (vec![3, 2], BigInt::from(12)),
            ]
        );
    }

    #[test]
    fn lattice_empty_below_diagonal() {
        // n < k leaves the outer range empty.
        assert!(lattice(2, 3).is_empty());
    }

    #[test]
    fn diagonal_lattice_is_singleton() {
        // n = k forces a_j = k - j at every level.
        let points = lattice(5, 5);
        assert_eq!(points.len(), 1);
        assert_eq!(points[0].0, vec![4, 3, 2, 1]);
        // Chain C(5,4) C(4,3) C(3,2) C(2,1) = 5! = 120.
        assert_eq!(points[0].1, BigInt::from(120));
    }
}
