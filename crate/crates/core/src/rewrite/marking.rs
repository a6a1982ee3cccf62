//! Markings: labelled pairs of letter positions that follow their letters through YB and C
//! moves. They are how the two cancelled pairs of a critical pair are tracked back to a
//! common word.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{apply_basic, BasicReduction, CompositeReduction, ReductionKind, RewriteError};
use crate::braid::{BraidWord, Letter};

/// Labels mapped to ordered pairs of distinct 0-based letter positions.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Marking {
    pairs: BTreeMap<String, (usize, usize)>,
}

impl Marking {
    pub fn new() -> Self {
        Self::default()
    }

    /// Add a label; positions must differ and not already be used by another label.
    pub fn with(mut self, label: &str, first: usize, second: usize) -> Result<Self, RewriteError> {
        if first == second {
            return Err(RewriteError::InvalidMarking(format!(
                "label `{label}` marks position {first} twice"
            )));
        }
        if self.pairs.contains_key(label) {
            return Err(RewriteError::InvalidMarking(format!("label `{label}` used twice")));
        }
        if let Some((other, _)) = self
            .pairs
            .iter()
            .find(|(_, &(a, b))| [a, b].contains(&first) || [a, b].contains(&second))
        {
            return Err(RewriteError::InvalidMarking(format!(
                "label `{label}` overlaps label `{other}`"
            )));
        }
        self.pairs.insert(label.to_string(), (first, second));
        Ok(self)
    }

    pub fn get(&self, label: &str) -> Option<(usize, usize)> {
        self.pairs.get(label).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, (usize, usize))> + '_ {
        self.pairs.iter().map(|(l, &p)| (l.as_str(), p))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Check that every marked position exists in `w`.
    pub fn validate_on(&self, w: &BraidWord) -> Result<(), RewriteError> {
        for (label, (a, b)) in self.iter() {
            if a.max(b) >= w.len() {
                return Err(RewriteError::InvalidMarking(format!(
                    "label `{label}` marks position {} of a word of length {}",
                    a.max(b),
                    w.len()
                )));
            }
        }
        Ok(())
    }

    fn map(&self, f: impl Fn(usize) -> usize) -> Marking {
        Marking {
            pairs: self
                .pairs
                .iter()
                .map(|(l, &(a, b))| (l.clone(), (f(a), f(b))))
                .collect(),
        }
    }
}

/// Carry a marking on `w` across one YB or C move. YB reverses the three letters of its
/// redex, C swaps its two.
pub fn transfer_marking(m: &Marking, w: &BraidWord, r: &BasicReduction) -> Result<Marking, RewriteError> {
    if r.kind() == ReductionKind::Cancel {
        return Err(RewriteError::UnsupportedKind);
    }
    m.validate_on(w)?;
    apply_basic(w, r)?;
    let p = r.position();
    Ok(match r.kind() {
        ReductionKind::Commute => m.map(|q| match q {
            q if q == p => p + 1,
            q if q == p + 1 => p,
            q => q,
        }),
        _ => m.map(|q| match q {
            q if q == p => p + 2,
            q if q == p + 2 => p,
            q => q,
        }),
    })
}

/// Transfer across a composite move, one basic step at a time.
pub fn transfer_marking_composite(
    m: &Marking,
    w: &BraidWord,
    r: &CompositeReduction,
) -> Result<Marking, RewriteError> {
    let mut cur = w.clone();
    let mut out = m.clone();
    for step in r.expand(w)? {
        out = transfer_marking(&out, &cur, &step)?;
        cur = apply_basic(&cur, &step)?;
    }
    Ok(out)
}

/// Distance between the two positions of each label.
pub fn distance(m: &Marking) -> BTreeMap<String, usize> {
    m.pairs
        .iter()
        .map(|(l, &(a, b))| (l.clone(), a.abs_diff(b)))
        .collect()
}

/// Letters of `w` together with the labels marking each one.
pub fn marked_letters(w: &BraidWord, m: &Marking) -> Vec<(Letter, Vec<String>)> {
    w.letters()
        .iter()
        .enumerate()
        .map(|(k, &l)| {
            let labels = m
                .iter()
                .filter(|(_, (a, b))| *a == k || *b == k)
                .map(|(name, _)| name.to_string())
                .collect();
            (l, labels)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SituationCase {
    /// Both marked letters of the two cancellations coincide.
    BothShared,
    /// Exactly one letter is shared.
    OneShared,
    Disjoint,
}

/// A V step `v` on a word, a chain of YB/C moves, and a V step `v'` at the end of the chain.
/// The canonical marking labels the pair cancelled by `v` as `x` and the pair cancelled by
/// `v'`, carried back to the first word, as `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericSituation {
    pub word: BraidWord,
    pub moves: Vec<BasicReduction>,
    pub v: BasicReduction,
    pub v_prime: BasicReduction,
    canonical: Marking,
}

impl GenericSituation {
    pub fn new(
        word: BraidWord,
        moves: Vec<BasicReduction>,
        v: BasicReduction,
        v_prime: BasicReduction,
    ) -> Result<Self, RewriteError> {
        if !v.is_cancel() || !v_prime.is_cancel() {
            return Err(RewriteError::InvalidSituation(
                "both ends of a generic situation must be V steps".into(),
            ));
        }
        if let Some(m) = moves.iter().find(|m| m.is_cancel()) {
            return Err(RewriteError::InvalidSituation(format!(
                "`{m}` is not a YB or C move"
            )));
        }
        apply_basic(&word, &v)?;
        let mut words = vec![word.clone()];
        for m in &moves {
            let next = apply_basic(words.last().expect("non-empty"), m)?;
            words.push(next);
        }
        let last = words.last().expect("non-empty");
        apply_basic(last, &v_prime)?;
        let p = v_prime.position();
        let mut y = Marking::new().with("y", p, p + 1)?;
        for (k, m) in moves.iter().enumerate().rev() {
            let back = m.inverse().expect("YB and C moves are invertible");
            y = transfer_marking(&y, &words[k + 1], &back)?;
        }
        let (y1, y2) = y.get("y").expect("just inserted");
        let x = (v.position(), v.position() + 1);
        let canonical = Marking {
            pairs: BTreeMap::from([("x".to_string(), x), ("y".to_string(), (y1, y2))]),
        };
        Ok(GenericSituation {
            word,
            moves,
            v,
            v_prime,
            canonical,
        })
    }

    /// The `x`/`y` marking on the first word. The two labels may share positions.
    pub fn canonical_marking(&self) -> &Marking {
        &self.canonical
    }
}

pub fn classify_generic(g: &GenericSituation) -> SituationCase {
    let (x1, x2) = g.canonical.get("x").expect("canonical marking has x");
    let (y1, y2) = g.canonical.get("y").expect("canonical marking has y");
    let shared = [y1, y2].iter().filter(|q| **q == x1 || **q == x2).count();
    match shared {
        2 => SituationCase::BothShared,
        1 => SituationCase::OneShared,
        _ => SituationCase::Disjoint,
    }
}
