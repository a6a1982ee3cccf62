//! The reduction calculus on positive braid words.
//!
//! Basic reductions are the braid relation in both directions (YB), distant commutation (C)
//! and crossing cancellation `σ_i σ_i ⤳ 1` (V). A [`ReductionTrace`] records a chain of them
//! and can be replayed; [`complete_reduce`] produces one ending at a minimal braid.

mod complete;
mod confluence;
mod marking;
mod paths;
pub(crate) mod trace;

use std::fmt;

use thiserror::Error;

use crate::braid::{BraidError, BraidWord, Letter};
use crate::syntax::ParseError;

pub use complete::{complete_reduce, complete_reduce_with, reduce_to_canonical, reduce_to_canonical_with};
pub use confluence::{check_confluence, ConfluenceReport, DiamondFailure, DEFAULT_CONFLUENCE_BUDGET};
pub use marking::{
    classify_generic, distance, marked_letters, transfer_marking, transfer_marking_composite,
    GenericSituation, Marking, SituationCase,
};
pub use paths::{BfsPaths, ConstructivePaths, MovePathFinder};
pub use trace::{reduction_length, verify_trace, CompositeAnnotation, ReductionTrace, TraceVerdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RewriteError {
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error("no {expected} redex at position {position} (found {found})")]
    RedexMismatch {
        position: usize,
        expected: String,
        found: String,
    },
    #[error("markings can only be transferred along YB or C moves")]
    UnsupportedKind,
    #[error("invalid marking: {0}")]
    InvalidMarking(String),
    #[error("invalid generic situation: {0}")]
    InvalidSituation(String),
    #[error("no YB/C move path from `{from}` to `{to}`")]
    NoMovePath { from: String, to: String },
    #[error("move path search exceeded its budget of {budget}")]
    PathBudget { budget: usize },
    #[error("trace parse error at {0}")]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ReductionKind {
    YbUp,
    YbDown,
    Commute,
    Cancel,
}

/// A single non-composite reduction at a 0-based letter position.
///
/// YB moves carry no generator index: it is fixed by the letters at the position, which is
/// also how the trace format writes them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasicReduction {
    /// `σ_i σ_{i+1} σ_i ⤳ σ_{i+1} σ_i σ_{i+1}`
    YbUp { at: usize },
    /// `σ_{i+1} σ_i σ_{i+1} ⤳ σ_i σ_{i+1} σ_i`
    YbDown { at: usize },
    /// `σ_i σ_j ⤳ σ_j σ_i` for `|i - j| > 1`
    Commute { at: usize, left: usize, right: usize },
    /// `σ_i σ_i ⤳ 1`
    Cancel { at: usize, index: usize },
}

impl BasicReduction {
    pub fn position(&self) -> usize {
        match *self {
            BasicReduction::YbUp { at }
            | BasicReduction::YbDown { at }
            | BasicReduction::Commute { at, .. }
            | BasicReduction::Cancel { at, .. } => at,
        }
    }

    pub fn kind(&self) -> ReductionKind {
        match self {
            BasicReduction::YbUp { .. } => ReductionKind::YbUp,
            BasicReduction::YbDown { .. } => ReductionKind::YbDown,
            BasicReduction::Commute { .. } => ReductionKind::Commute,
            BasicReduction::Cancel { .. } => ReductionKind::Cancel,
        }
    }

    pub fn is_cancel(&self) -> bool {
        matches!(self, BasicReduction::Cancel { .. })
    }

    /// The move undoing a YB or C step. V steps have no inverse reduction.
    pub fn inverse(&self) -> Option<BasicReduction> {
        match *self {
            BasicReduction::YbUp { at } => Some(BasicReduction::YbDown { at }),
            BasicReduction::YbDown { at } => Some(BasicReduction::YbUp { at }),
            BasicReduction::Commute { at, left, right } => Some(BasicReduction::Commute {
                at,
                left: right,
                right: left,
            }),
            BasicReduction::Cancel { .. } => None,
        }
    }
}

impl fmt::Display for BasicReduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BasicReduction::YbUp { at } => write!(f, "YB+ @{at}"),
            BasicReduction::YbDown { at } => write!(f, "YB- @{at}"),
            BasicReduction::Commute { at, left, right } => write!(f, "C @{at} ({left},{right})"),
            BasicReduction::Cancel { at, index } => write!(f, "V @{at} ({index})"),
        }
    }
}

/// Composite basic reductions: a YB or C move dragging a power `σ^n` through. They expand
/// to `n` basic steps; with `power == 1` they are the basic move itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CompositeReduction {
    /// `σ_i σ_{i+1} σ_i^n ⤳ σ_{i+1}^n σ_i σ_{i+1}`
    YbUpTail { at: usize, power: usize },
    /// `σ_i^n σ_{i+1} σ_i ⤳ σ_{i+1} σ_i σ_{i+1}^n`
    YbUpHead { at: usize, power: usize },
    /// `σ_{i+1} σ_i σ_{i+1}^n ⤳ σ_i^n σ_{i+1} σ_i`
    YbDownTail { at: usize, power: usize },
    /// `σ_{i+1}^n σ_i σ_{i+1} ⤳ σ_i σ_{i+1} σ_i^n`
    YbDownHead { at: usize, power: usize },
    /// `σ_i^n σ_j ⤳ σ_j σ_i^n`
    CommuteHead { at: usize, left: usize, right: usize, power: usize },
    /// `σ_i σ_j^n ⤳ σ_j^n σ_i`
    CommuteTail { at: usize, left: usize, right: usize, power: usize },
}

impl CompositeReduction {
    pub fn power(&self) -> usize {
        match *self {
            CompositeReduction::YbUpTail { power, .. }
            | CompositeReduction::YbUpHead { power, .. }
            | CompositeReduction::YbDownTail { power, .. }
            | CompositeReduction::YbDownHead { power, .. }
            | CompositeReduction::CommuteHead { power, .. }
            | CompositeReduction::CommuteTail { power, .. } => power,
        }
    }

    pub fn position(&self) -> usize {
        match *self {
            CompositeReduction::YbUpTail { at, .. }
            | CompositeReduction::YbUpHead { at, .. }
            | CompositeReduction::YbDownTail { at, .. }
            | CompositeReduction::YbDownHead { at, .. }
            | CompositeReduction::CommuteHead { at, .. }
            | CompositeReduction::CommuteTail { at, .. } => at,
        }
    }

    /// The letters the redex must consist of, given the generator at its first position.
    fn pattern(&self, first: usize) -> Option<Vec<usize>> {
        let n = self.power();
        let rep = |g: usize, k: usize| std::iter::repeat_n(g, k);
        let v: Vec<usize> = match *self {
            CompositeReduction::YbUpTail { .. } => {
                [first, first + 1].into_iter().chain(rep(first, n)).collect()
            }
            CompositeReduction::YbUpHead { .. } => {
                rep(first, n).chain([first + 1, first]).collect()
            }
            CompositeReduction::YbDownTail { .. } => {
                let i = first.checked_sub(1)?;
                [i + 1, i].into_iter().chain(rep(i + 1, n)).collect()
            }
            CompositeReduction::YbDownHead { .. } => {
                let i = first.checked_sub(1)?;
                rep(i + 1, n).chain([i, i + 1]).collect()
            }
            CompositeReduction::CommuteHead { left, right, .. } => {
                rep(left, n).chain([right]).collect()
            }
            CompositeReduction::CommuteTail { left, right, .. } => {
                [left].into_iter().chain(rep(right, n)).collect()
            }
        };
        Some(v)
    }

    /// The basic steps this composite stands for, checked against `w`.
    pub fn expand(&self, w: &BraidWord) -> Result<Vec<BasicReduction>, RewriteError> {
        let n = self.power();
        let at = self.position();
        let letters = w.letters();
        let mismatch = |found: String| RewriteError::RedexMismatch {
            position: at,
            expected: self.to_string(),
            found,
        };
        if n == 0 {
            return Err(mismatch("power 0".into()));
        }
        if let CompositeReduction::CommuteHead { left, right, .. }
        | CompositeReduction::CommuteTail { left, right, .. } = *self
        {
            if left.abs_diff(right) < 2 {
                return Err(mismatch(format!("adjacent generators ({left},{right})")));
            }
        }
        let first = letters.get(at).map(|l| l.index).ok_or_else(|| mismatch("end of word".into()))?;
        let pattern = self.pattern(first).ok_or_else(|| mismatch(format!("s{first}")))?;
        let window: Vec<Letter> = letters.iter().skip(at).take(pattern.len()).copied().collect();
        let expected: Vec<Letter> = pattern.iter().map(|&i| Letter::pos(i)).collect();
        if window != expected {
            return Err(mismatch(render_letters(&window)));
        }
        let steps = match *self {
            CompositeReduction::YbUpTail { .. } => {
                (0..n).map(|k| BasicReduction::YbUp { at: at + k }).collect()
            }
            CompositeReduction::YbUpHead { .. } => {
                (0..n).rev().map(|k| BasicReduction::YbUp { at: at + k }).collect()
            }
            CompositeReduction::YbDownTail { .. } => {
                (0..n).map(|k| BasicReduction::YbDown { at: at + k }).collect()
            }
            CompositeReduction::YbDownHead { .. } => {
                (0..n).rev().map(|k| BasicReduction::YbDown { at: at + k }).collect()
            }
            CompositeReduction::CommuteHead { left, right, .. } => (0..n)
                .rev()
                .map(|k| BasicReduction::Commute { at: at + k, left, right })
                .collect(),
            CompositeReduction::CommuteTail { left, right, .. } => (0..n)
                .map(|k| BasicReduction::Commute { at: at + k, left, right })
                .collect(),
        };
        Ok(steps)
    }
}

impl fmt::Display for CompositeReduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CompositeReduction::YbUpTail { at, power } => write!(f, "YB+ @{at} tail^{power}"),
            CompositeReduction::YbUpHead { at, power } => write!(f, "YB+ @{at} head^{power}"),
            CompositeReduction::YbDownTail { at, power } => write!(f, "YB- @{at} tail^{power}"),
            CompositeReduction::YbDownHead { at, power } => write!(f, "YB- @{at} head^{power}"),
            CompositeReduction::CommuteHead { at, left, right, power } => {
                write!(f, "C @{at} ({left},{right}) head^{power}")
            }
            CompositeReduction::CommuteTail { at, left, right, power } => {
                write!(f, "C @{at} ({left},{right}) tail^{power}")
            }
        }
    }
}

fn render_letters(letters: &[Letter]) -> String {
    if letters.is_empty() {
        return "end of word".into();
    }
    letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

fn letter_at(w: &BraidWord, p: usize) -> Option<usize> {
    w.letters().get(p).filter(|l| !l.inverse).map(|l| l.index)
}

/// Apply one basic reduction, checking its redex.
pub fn apply_basic(w: &BraidWord, r: &BasicReduction) -> Result<BraidWord, RewriteError> {
    let at = r.position();
    let window = |k: usize| render_letters(&w.letters()[at.min(w.len())..(at + k).min(w.len())]);
    let mismatch = |expected: &str, k: usize| RewriteError::RedexMismatch {
        position: at,
        expected: expected.to_string(),
        found: window(k),
    };
    let mut letters = w.letters().to_vec();
    match *r {
        BasicReduction::YbUp { .. } | BasicReduction::YbDown { .. } => {
            let up = r.kind() == ReductionKind::YbUp;
            let expected = if up { "s(i) s(i+1) s(i)" } else { "s(i+1) s(i) s(i+1)" };
            let (Some(a), Some(b), Some(c)) = (letter_at(w, at), letter_at(w, at + 1), letter_at(w, at + 2))
            else {
                return Err(mismatch(expected, 3));
            };
            let ok = a == c && if up { b == a + 1 } else { a == b + 1 };
            if !ok {
                return Err(mismatch(expected, 3));
            }
            letters[at] = Letter::pos(b);
            letters[at + 1] = Letter::pos(a);
            letters[at + 2] = Letter::pos(b);
        }
        BasicReduction::Commute { left, right, .. } => {
            let expected = format!("s{left} s{right} with |i-j|>1");
            if left.abs_diff(right) < 2
                || letter_at(w, at) != Some(left)
                || letter_at(w, at + 1) != Some(right)
            {
                return Err(mismatch(&expected, 2));
            }
            letters.swap(at, at + 1);
        }
        BasicReduction::Cancel { index, .. } => {
            if letter_at(w, at) != Some(index) || letter_at(w, at + 1) != Some(index) {
                return Err(mismatch(&format!("s{index} s{index}"), 2));
            }
            letters.drain(at..at + 2);
        }
    }
    Ok(BraidWord::new(w.strands(), letters)?)
}

/// Apply a composite reduction through its basic expansion.
pub fn apply_composite(w: &BraidWord, r: &CompositeReduction) -> Result<BraidWord, RewriteError> {
    r.expand(w)?
        .iter()
        .try_fold(w.clone(), |cur, step| apply_basic(&cur, step))
}

/// Every non-composite redex of a positive word, by position and then by kind.
pub fn enumerate_redexes(w: &BraidWord) -> Result<Vec<BasicReduction>, RewriteError> {
    w.require_positive()?;
    let v = w.indices();
    Ok(redexes_of(&v))
}

pub(crate) fn redexes_of(v: &[usize]) -> Vec<BasicReduction> {
    let mut out = Vec::new();
    for at in 0..v.len() {
        if at + 2 < v.len() && v[at] == v[at + 2] {
            if v[at + 1] == v[at] + 1 {
                out.push(BasicReduction::YbUp { at });
            } else if v[at + 1] + 1 == v[at] {
                out.push(BasicReduction::YbDown { at });
            }
        }
        if at + 1 < v.len() {
            let (left, right) = (v[at], v[at + 1]);
            if left.abs_diff(right) > 1 {
                out.push(BasicReduction::Commute { at, left, right });
            } else if left == right {
                out.push(BasicReduction::Cancel { at, index: left });
            }
        }
    }
    out
}

/// Index-level application for search loops; the redex is assumed valid.
pub(crate) fn apply_unchecked(v: &mut Vec<usize>, r: &BasicReduction) {
    match *r {
        BasicReduction::YbUp { at } | BasicReduction::YbDown { at } => {
            let (a, b) = (v[at], v[at + 1]);
            v[at] = b;
            v[at + 1] = a;
            v[at + 2] = b;
        }
        BasicReduction::Commute { at, .. } => v.swap(at, at + 1),
        BasicReduction::Cancel { at, .. } => {
            v.drain(at..at + 2);
        }
    }
}
