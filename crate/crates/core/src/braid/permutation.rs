use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::BraidError;

/// A bijection of `{1..n}` in one-line notation.
///
/// Composition convention, used everywhere in this crate: a permutation records the
/// *arrangement* produced by a braid or 1-cell, so `images[k - 1]` is the starting position
/// of the strand that finishes at position `k`. Words act left to right, and
/// [`Permutation::then`] is the product "this one first, then `other`". Under this reading
/// the block symmetry `c_{p,q}` is `[p+1, ..., p+q, 1, ..., p]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn new(images: Vec<usize>) -> Result<Self, BraidError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(BraidError::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 1..{n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The adjacent transposition `s_i` on `n` points (1-based `i`).
    pub fn transposition(n: usize, i: usize) -> Self {
        Self::identity(n).swap_positions(i)
    }

    /// The block symmetry moving a block of `p` points past a block of `q` points.
    pub fn block_swap(p: usize, q: usize) -> Self {
        Permutation {
            images: (p + 1..=p + q).chain(1..=p).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    pub fn inversions(&self) -> usize {
        let v = &self.images;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "permutation sizes differ");
        Permutation {
            images: other.images.iter().map(|&k| self.images[k - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v - 1] = k + 1;
        }
        Permutation { images }
    }

    /// Juxtaposition: `self` on the first block, `other` shifted onto the second.
    pub fn block_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.len();
        Permutation {
            images: self
                .images
                .iter()
                .copied()
                .chain(other.images.iter().map(|v| v + shift))
                .collect(),
        }
    }

    /// Right multiplication by `s_i`: exchange the entries at positions `i`, `i+1`.
    pub fn swap_positions(&self, i: usize) -> Permutation {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// Left multiplication by `s_i`: exchange the values `i`, `i+1`.
    pub fn swap_values(&self, i: usize) -> Permutation {
        Permutation {
            images: self
                .images
                .iter()
                .map(|&v| match v {
                    v if v == i => i + 1,
                    v if v == i + 1 => i,
                    v => v,
                })
                .collect(),
        }
    }

    /// Positions `i` with `images[i] > images[i+1]`: for a permutation braid these are the
    /// generators it can end with.
    pub fn descents(&self) -> BTreeSet<usize> {
        (1..self.len())
            .filter(|&i| self.images[i - 1] > self.images[i])
            .collect()
    }

    pub fn has_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}
