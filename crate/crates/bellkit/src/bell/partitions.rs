//! Enumeration of the partitions of n into exactly k parts.

use crate::error::Error;
use crate::polyalgebra::Monomial;

/// A partition of n into exactly k parts, stored by multiplicity:
/// `counts[a - 1]` is the number of parts equal to `a`, for
/// `a = 1..=n-k+1` (no part can exceed `n - k + 1`).
///
/// The counts always satisfy `sum(a * counts[a-1]) = n` and
/// `sum(counts) = k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    counts: Vec<u32>,
}

impl Partition {
    /// Multiplicities indexed by part size minus one.
    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// The monomial `x1^l1 * x2^l2 * ...` whose exponents are the
    /// multiplicities.
    pub fn monomial(&self) -> Monomial {
        Monomial::from_exponents(
            self.counts
                .iter()
                .enumerate()
                .map(|(i, &l)| (i as u32 + 1, l)),
        )
    }
}

/// Lists every partition of n into exactly k parts, in lexicographically
/// ascending order of the count vector.
pub fn enumerate_partitions(n: u32, k: u32) -> Result<Vec<Partition>, Error> {
    if k == 0 || k > n {
        return Err(Error::InvalidIndex {
            n,
            k,
            requires: "n >= k >= 1",
        });
    }
    let m = n - k + 1;
    let mut out = Vec::new();
    let mut counts = vec![0u32; m as usize];
    descend(&mut out, &mut counts, 1, m, k, n);
    Ok(out)
}

/// Depth-first search over multiplicities, part size `var` upward.
/// `parts_left` and `weight_left` are the two constraint sums still to be
/// satisfied by parts of size >= var.
fn descend(
    out: &mut Vec<Partition>,
    counts: &mut [u32],
    var: u32,
    m: u32,
    parts_left: u32,
    weight_left: u32,
) {
    let slot = (var - 1) as usize;
    if var == m {
        if m * parts_left == weight_left {
            counts[slot] = parts_left;
            out.push(Partition {
                counts: counts.to_vec(),
            });
            counts[slot] = 0;
        }
        return;
    }
    let max = parts_left.min(weight_left / var);
    for l in 0..=max {
        let r = parts_left - l;
        let w = weight_left - var * l;
        // Parts of size > var must still be able to hit the remaining
        // weight exactly: each is at least var + 1 and at most m.
        if r * (var + 1) > w || w > r * m {
            continue;
        }
        counts[slot] = l;
        descend(out, counts, var + 1, m, r, w);
        counts[slot] = 0;
    }
}
