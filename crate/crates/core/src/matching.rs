//! Comparison of root multisets by bottleneck assignment.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result, RootSet};

/// Outcome of [`match_root_multisets`].
#[derive(Clone, Debug, PartialEq)]
pub enum RootMatch {
    /// `permutation[i]` is the index in `b` paired with `a[i]`.
    Paired {
        permutation: Vec<usize>,
        max_distance: f64,
    },
    /// The best achievable pairing still has a pair this far apart.
    Unmatched { distance: f64 },
}

impl RootMatch {
    pub fn is_paired(&self) -> bool {
        matches!(self, RootMatch::Paired { .. })
    }

    /// Largest pair distance of the optimal pairing.
    pub fn distance(&self) -> f64 {
        match *self {
            RootMatch::Paired { max_distance, .. } => max_distance,
            RootMatch::Unmatched { distance } => distance,
        }
    }
}

/// Finds the perfect matching between `a` and `b` that minimises the largest
/// pair distance, and reports it as paired iff that distance is `<= tol`.
///
/// Binary search over the `n²` candidate thresholds, each tested with a
/// Kuhn augmenting-path matching; exact for any `n`.
pub fn match_root_multisets(a: &RootSet, b: &RootSet, tol: f64) -> Result<RootMatch> {
    let n = a.len();
    if b.len() != n {
        return Err(Error::invalid(alloc::format!(
            "root multisets have different sizes ({n} vs {})",
            b.len()
        )));
    }
    if n == 0 {
        return Ok(RootMatch::Paired {
            permutation: Vec::new(),
            max_distance: 0.0,
        });
    }
    let dist: Vec<Vec<f64>> = a
        .iter()
        .map(|x| b.iter().map(|y| (x - y).norm()).collect())
        .collect();
    let mut thresholds: Vec<f64> = dist.iter().flatten().copied().collect();
    thresholds.sort_by(f64::total_cmp);
    thresholds.dedup();

    // The largest threshold always admits a perfect matching.
    let (mut lo, mut hi) = (0, thresholds.len() - 1);
    let mut best = perfect_matching(&dist, thresholds[hi]).expect("complete graph has a matching");
    while lo < hi {
        let mid = (lo + hi) / 2;
        match perfect_matching(&dist, thresholds[mid]) {
            Some(m) => {
                best = m;
                hi = mid;
            }
            None => lo = mid + 1,
        }
    }
    let bottleneck = thresholds[lo];
    if bottleneck <= tol {
        Ok(RootMatch::Paired {
            permutation: best,
            max_distance: bottleneck,
        })
    } else {
        Ok(RootMatch::Unmatched {
            distance: bottleneck,
        })
    }
}

fn perfect_matching(dist: &[Vec<f64>], limit: f64) -> Option<Vec<usize>> {
    let n = dist.len();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        let mut seen = vec![false; n];
        if !augment(i, dist, limit, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut perm = vec![0; n];
    for (j, o) in owner.iter().enumerate() {
        perm[o.expect("perfect matching covers every column")] = j;
    }
    Some(perm)
}

fn augment(
    i: usize,
    dist: &[Vec<f64>],
    limit: f64,
    owner: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for j in 0..dist.len() {
        if dist[i][j] <= limit && !seen[j] {
            seen[j] = true;
            if owner[j].is_none_or(|k| augment(k, dist, limit, owner, seen)) {
                owner[j] = Some(i);
                return true;
            }
        }
    }
    false
}
