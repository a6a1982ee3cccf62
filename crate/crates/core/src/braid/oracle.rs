//! Brute-force positive-monoid oracle: closure of a word under the length-preserving braid
//! relations. Only meant for desk-scale inputs; it refuses to grow past its budget.

use std::collections::{BTreeSet, VecDeque};

use super::{BraidError, BraidWord};

pub const DEFAULT_CLASS_BUDGET: usize = 100_000;

/// Every word one YB or C move away from `indices`.
pub fn yb_c_neighbours(indices: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for p in 0..indices.len() {
        if p + 1 < indices.len() && indices[p].abs_diff(indices[p + 1]) > 1 {
            let mut v = indices.to_vec();
            v.swap(p, p + 1);
            out.push(v);
        }
        if p + 2 < indices.len() {
            let (a, b, c) = (indices[p], indices[p + 1], indices[p + 2]);
            if a == c && a.abs_diff(b) == 1 {
                let mut v = indices.to_vec();
                v[p] = b;
                v[p + 1] = a;
                v[p + 2] = b;
                out.push(v);
            }
        }
    }
    out
}

/// All positive words monoid-equal to `w`, or an explicit budget error.
pub fn positive_class(w: &BraidWord, max_size: usize) -> Result<BTreeSet<BraidWord>, BraidError> {
    w.require_positive()?;
    let n = w.strands();
    let start = w.indices();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        for next in yb_c_neighbours(&cur) {
            if !seen.contains(&next) {
                if seen.len() >= max_size {
                    return Err(BraidError::OracleBudget { budget: max_size });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(seen
        .into_iter()
        .map(|v| BraidWord::from_indices_unchecked(n, &v))
        .collect())
}

pub fn positive_class_with_default(w: &BraidWord) -> Result<BTreeSet<BraidWord>, BraidError> {
    positive_class(w, DEFAULT_CLASS_BUDGET)
}
