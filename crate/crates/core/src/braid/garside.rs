//! Left-greedy normal form of positive braids.
//!
//! A positive braid is stored as a product of permutation braids `A_1 A_2 ... A_k`, none of
//! them trivial, with every adjacent pair left-weighted: `S(A_{j+1}) ⊆ F(A_j)`. This
//! factorization is unique, so it decides equality in the positive monoid, and its first
//! factor is the longest minimal prefix of the braid.

use std::collections::BTreeSet;

use super::{BraidError, BraidWord, Permutation};

/// Generators a permutation braid can start with: pairs of adjacent starting positions
/// whose strands cross.
fn simple_starting_set(p: &Permutation) -> BTreeSet<usize> {
    p.inverse().descents()
}

/// Rewrite `(a, b)` into a left-weighted pair with the same product. Returns whether
/// anything moved.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let mut moved = false;
    loop {
        let finish = a.descents();
        let Some(i) = simple_starting_set(b).into_iter().find(|i| !finish.contains(i)) else {
            return moved;
        };
        // σ_i leaves b on the left and joins a on the right; a·σ_i stays simple since the
        // strands at i, i+1 have not crossed in a.
        *a = a.swap_positions(i);
        *b = b.swap_values(i);
        moved = true;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    strands: usize,
    factors: Vec<Permutation>,
}

impl NormalForm {
    fn empty(strands: usize) -> Self {
        NormalForm {
            strands,
            factors: Vec::new(),
        }
    }

    fn push_generator(&mut self, i: usize) {
        self.factors.push(Permutation::transposition(self.strands, i));
        loop {
            let mut changed = false;
            for j in 0..self.factors.len().saturating_sub(1) {
                let (left, right) = self.factors.split_at_mut(j + 1);
                changed |= left_weight(&mut left[j], &mut right[0]);
            }
            let before = self.factors.len();
            self.factors.retain(|f| !f.is_identity());
            if !changed && before == self.factors.len() {
                break;
            }
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    /// Concatenated permutation-braid words of the factors.
    pub fn to_word(&self) -> BraidWord {
        let mut indices = Vec::new();
        for f in &self.factors {
            indices.extend(permutation_braid(f).indices());
        }
        BraidWord::from_indices_unchecked(self.strands, &indices)
    }

    pub fn starting_set(&self) -> BTreeSet<usize> {
        self.factors
            .first()
            .map(simple_starting_set)
            .unwrap_or_default()
    }
}

pub fn normal_form(w: &BraidWord) -> Result<NormalForm, BraidError> {
    w.require_positive()?;
    let mut nf = NormalForm::empty(w.strands());
    for l in w.letters() {
        nf.push_generator(l.index);
    }
    Ok(nf)
}

/// `{i : w = σ_i τ}` for positive `τ`, read off the first normal-form factor. Empty for
/// the empty braid.
pub fn starting_set(w: &BraidWord) -> Result<BTreeSet<usize>, BraidError> {
    Ok(normal_form(w)?.starting_set())
}

/// `{i : w = τ σ_i}`; reversal is an anti-automorphism of the positive monoid.
pub fn finishing_set(w: &BraidWord) -> Result<BTreeSet<usize>, BraidError> {
    starting_set(&w.reversed())
}

pub fn monoid_equal(a: &BraidWord, b: &BraidWord) -> Result<bool, BraidError> {
    if a.strands() != b.strands() {
        return Err(BraidError::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    Ok(normal_form(a)? == normal_form(b)?)
}

/// Reduced word for `p`, read off a bubble sort of its one-line notation.
///
/// Sorting the arrangement back to the identity swaps exactly one inversion per step, so the
/// reversed swap sequence is a word of length `inversions(p)` realizing `p`.
pub fn permutation_braid(p: &Permutation) -> BraidWord {
    let mut v = p.images().to_vec();
    let mut swaps = Vec::with_capacity(p.inversions());
    let n = v.len();
    for pass in 0..n {
        let mut swapped = false;
        for k in 0..n.saturating_sub(pass + 1) {
            if v[k] > v[k + 1] {
                v.swap(k, k + 1);
                swaps.push(k + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    swaps.reverse();
    BraidWord::from_indices_unchecked(n, &swaps)
}

/// A left-weighted split `w = τ ω` with `τ` minimal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub tau: BraidWord,
    pub omega: BraidWord,
}

/// The split whose left part is the longest minimal prefix of `w`: the first normal-form
/// factor, with the remaining factors as `ω`.
pub fn left_weighted_factorization(w: &BraidWord) -> Result<Factorization, BraidError> {
    let nf = normal_form(w)?;
    let n = w.strands();
    let Some((first, rest)) = nf.factors.split_first() else {
        return Ok(Factorization {
            tau: BraidWord::empty(n),
            omega: BraidWord::empty(n),
        });
    };
    let omega = NormalForm {
        strands: n,
        factors: rest.to_vec(),
    }
    .to_word();
    Ok(Factorization {
        tau: permutation_braid(first),
        omega,
    })
}
