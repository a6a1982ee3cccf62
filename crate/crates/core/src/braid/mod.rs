//! Braid words on `n` strands, their underlying permutations, crossing tables, and the
//! positive-monoid machinery (normal forms, starting/finishing sets, minimal braids).
//!
//! Generators are 1-based: `σ_i` crosses the strands at positions `i` and `i+1`. Words are
//! read left to right, the leftmost letter acting first.

mod garside;
mod oracle;
mod permutation;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::syntax::ParseError;

pub use garside::{
    finishing_set, left_weighted_factorization, monoid_equal, normal_form, permutation_braid,
    starting_set, Factorization, NormalForm,
};
pub use oracle::{positive_class, positive_class_with_default, yb_c_neighbours, DEFAULT_CLASS_BUDGET};
pub use permutation::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("generator index {index} out of range for {strands} strands")]
    InvalidIndex { index: usize, strands: usize },
    #[error("word is not positive (inverse letter at position {position})")]
    NotPositive { position: usize },
    #[error("strand counts differ ({left} vs {right})")]
    StrandMismatch { left: usize, right: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("oracle budget of {budget} words exceeded")]
    OracleBudget { budget: usize },
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
}

/// One Artin generator `σ_i` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub index: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(index: usize) -> Self {
        Letter {
            index,
            inverse: false,
        }
    }

    pub fn neg(index: usize) -> Self {
        Letter {
            index,
            inverse: true,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.inverse { 'S' } else { 's' };
        write!(f, "{s}{}", self.index)
    }
}

/// A braid word: a strand count and a sequence of signed generators.
///
/// The strand count may be zero so that cells between unit objects have a word; such a word
/// is necessarily empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, BraidError> {
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(BraidError::InvalidIndex {
                    index: l.index,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// A positive word from generator indices.
    pub fn positive(strands: usize, indices: &[usize]) -> Result<Self, BraidError> {
        Self::new(strands, indices.iter().map(|&i| Letter::pos(i)).collect())
    }

    pub fn empty(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub(crate) fn from_indices_unchecked(strands: usize, indices: &[usize]) -> Self {
        BraidWord {
            strands,
            letters: indices.iter().map(|&i| Letter::pos(i)).collect(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| !l.inverse)
    }

    pub fn require_positive(&self) -> Result<(), BraidError> {
        match self.letters.iter().position(|l| l.inverse) {
            Some(position) => Err(BraidError::NotPositive { position }),
            None => Ok(()),
        }
    }

    /// Generator indices of a word; the caller must know the word is positive.
    pub fn indices(&self) -> Vec<usize> {
        self.letters.iter().map(|l| l.index).collect()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn reversed(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// The group inverse: reversed, with every sign flipped.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    index: l.index,
                    inverse: !l.inverse,
                })
                .collect(),
        }
    }

    /// Place this word on the strands `offset+1 ..= offset+strands` of a wider braid.
    pub fn shifted(&self, offset: usize, total_strands: usize) -> BraidWord {
        debug_assert!(offset + self.strands <= total_strands);
        BraidWord {
            strands: total_strands,
            letters: self
                .letters
                .iter()
                .map(|l| Letter {
                    index: l.index + offset,
                    inverse: l.inverse,
                })
                .collect(),
        }
    }

    pub fn parse(text: &str) -> Result<BraidWord, ParseError> {
        let colon = text
            .find(':')
            .ok_or_else(|| ParseError::new(1, 1, "expected `<strands>:` prefix"))?;
        let head = &text[..colon];
        let lead = head.len() - head.trim_start().len();
        let strands: usize = head.trim().parse().map_err(|_| {
            ParseError::new(1, lead + 1, format!("invalid strand count `{}`", head.trim()))
        })?;
        let mut letters = Vec::new();
        let rest = &text[colon + 1..];
        let base = colon + 1;
        let mut offset = 0;
        for token in rest.split(char::is_whitespace) {
            let column = base + offset + 1;
            offset += token.len() + 1;
            if token.is_empty() {
                continue;
            }
            let inverse = match token.as_bytes()[0] {
                b's' => false,
                b'S' => true,
                _ => {
                    return Err(ParseError::new(
                        1,
                        column,
                        format!("expected generator `sK` or `SK`, found `{token}`"),
                    ))
                }
            };
            let index: usize = token[1..].parse().map_err(|_| {
                ParseError::new(1, column, format!("invalid generator index in `{token}`"))
            })?;
            if index == 0 || index >= strands {
                return Err(ParseError::new(
                    1,
                    column,
                    format!("generator {token} out of range for {strands} strands"),
                ));
            }
            letters.push(Letter { index, inverse });
        }
        Ok(BraidWord { strands, letters })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BraidWord::parse(s)
    }
}

/// Composite of the adjacent transpositions of the letters, signs ignored.
pub fn underlying_permutation(w: &BraidWord) -> Permutation {
    let mut arrangement: Vec<usize> = (1..=w.strands).collect();
    for l in &w.letters {
        arrangement.swap(l.index - 1, l.index);
    }
    Permutation::new(arrangement).expect("swaps of a bijection")
}

/// How many times each unordered pair of strands crosses in a positive word.
///
/// Strands are named by their starting positions. Every pair `p < q` is present, zeros
/// included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCrossingTable {
    counts: BTreeMap<(usize, usize), usize>,
}

impl PairCrossingTable {
    pub fn get(&self, p: usize, q: usize) -> usize {
        let key = if p < q { (p, q) } else { (q, p) };
        self.counts.get(&key).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn max(&self) -> usize {
        self.counts.values().copied().max().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.counts.iter().map(|(&k, &v)| (k, v))
    }
}

pub fn pair_crossings(w: &BraidWord) -> Result<PairCrossingTable, BraidError> {
    w.require_positive()?;
    let n = w.strands;
    let mut counts = BTreeMap::new();
    for p in 1..=n {
        for q in p + 1..=n {
            counts.insert((p, q), 0);
        }
    }
    let mut at: Vec<usize> = (1..=n).collect();
    for l in &w.letters {
        let (a, b) = (at[l.index - 1], at[l.index]);
        *counts.get_mut(&(a.min(b), a.max(b))).expect("pair present") += 1;
        at.swap(l.index - 1, l.index);
    }
    Ok(PairCrossingTable { counts })
}

/// No two strands cross twice.
pub fn is_minimal(w: &BraidWord) -> Result<bool, BraidError> {
    Ok(pair_crossings(w)?.max() <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["3: s1 s2 s1", "4:", "2: S1 s1", "1:", "6: s5 S3 s1"] {
            assert_eq!(word(s).to_string(), s);
        }
        assert_eq!(word("  3:s1   s2 ").to_string(), "3: s1 s2");
    }

    #[test]
    fn parse_errors_carry_columns() {
        let e = BraidWord::parse("3: s1 s3").unwrap_err();
        assert_eq!((e.line, e.column), (1, 7));
        let e = BraidWord::parse("3: s1 x2").unwrap_err();
        assert_eq!(e.column, 7);
        assert!(BraidWord::parse("s1 s2").is_err());
        assert!(BraidWord::parse("q: s1").is_err());
        assert!(BraidWord::parse("3: s0").is_err());
    }

    #[test]
    fn constructor_validates_indices() {
        assert!(matches!(
            BraidWord::positive(3, &[3]),
            Err(BraidError::InvalidIndex { index: 3, strands: 3 })
        ));
        assert!(BraidWord::positive(0, &[]).is_ok());
    }

    #[test]
    fn underlying_permutation_examples() {
        assert!(underlying_permutation(&word("3:")).is_identity());
        assert_eq!(underlying_permutation(&word("2: s1")).images(), &[2, 1]);
        assert_eq!(underlying_permutation(&word("3: s1 s2 s1")).images(), &[3, 2, 1]);
        // signs are ignored
        assert_eq!(underlying_permutation(&word("3: S1 s2 S1")).images(), &[3, 2, 1]);
    }

    #[test]
    fn underlying_permutation_of_concat_is_then() {
        let a = word("4: s1 s3 s2");
        let b = word("4: s2 s1 s1 s3");
        let ab = a.concat(&b).unwrap();
        assert_eq!(
            underlying_permutation(&ab),
            underlying_permutation(&a).then(&underlying_permutation(&b))
        );
    }

    #[test]
    fn pair_crossing_examples() {
        let t = pair_crossings(&word("3: s1 s2")).unwrap();
        assert_eq!((t.get(1, 2), t.get(1, 3), t.get(2, 3)), (1, 1, 0));
        let t = pair_crossings(&word("2: s1 s1")).unwrap();
        assert_eq!(t.get(1, 2), 2);
        let t = pair_crossings(&word("4:")).unwrap();
        assert_eq!(t.iter().count(), 6);
        assert_eq!(t.total(), 0);
        assert!(pair_crossings(&word("2: S1")).is_err());
    }

    #[test]
    fn minimality_examples() {
        assert!(is_minimal(&word("3: s1 s2")).unwrap());
        assert!(!is_minimal(&word("2: s1 s1")).unwrap());
        assert!(is_minimal(&word("3:")).unwrap());
        assert!(matches!(
            is_minimal(&word("3: s1 S2")),
            Err(BraidError::NotPositive { position: 1 })
        ));
    }

    #[test]
    fn inverse_and_shift() {
        let w = word("3: s1 S2");
        assert_eq!(w.inverse().to_string(), "3: s2 S1");
        assert_eq!(w.shifted(2, 5).to_string(), "5: s3 S4");
    }
}
