//! Exhaustive confluence check: explore every word reachable by basic reductions and check
//! that all of them complete to the same minimal braid with the same total number of
//! cancellations, and that each pair of diverging steps rejoins.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use super::{apply_unchecked, complete_reduce, redexes_of, BasicReduction, RewriteError};
use crate::braid::{normal_form, BraidWord, NormalForm};

pub const DEFAULT_CONFLUENCE_BUDGET: usize = 50_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiamondFailure {
    pub word: String,
    pub left: String,
    pub right: String,
    pub left_target: String,
    pub right_target: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfluenceReport {
    pub word: String,
    pub states_explored: usize,
    /// True when the budget stopped the exploration early.
    pub partial: bool,
    pub targets_agree: bool,
    pub target: String,
    /// Distinct totals of V steps (from the original word) over all explored states.
    pub cancellations: BTreeSet<usize>,
    pub diamonds_checked: usize,
    pub failures: Vec<DiamondFailure>,
}

impl ConfluenceReport {
    /// No disagreement among the explored states. Only conclusive when `partial` is false.
    pub fn is_confluent(&self) -> bool {
        self.targets_agree && self.cancellations.len() == 1 && self.failures.is_empty()
    }
}

impl fmt::Display for ConfluenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts: Vec<String> = self.cancellations.iter().map(|c| c.to_string()).collect();
        writeln!(f, "word: {}", self.word)?;
        writeln!(f, "states: {}", self.states_explored)?;
        writeln!(f, "partial: {}", self.partial)?;
        writeln!(f, "targets agree: {}", self.targets_agree)?;
        writeln!(f, "target: {}", self.target)?;
        writeln!(f, "cancellations: {{{}}}", counts.join(","))?;
        writeln!(f, "diamonds checked: {}", self.diamonds_checked)?;
        writeln!(f, "failures: {}", self.failures.len())?;
        for d in &self.failures {
            writeln!(
                f,
                "  at {}: {} -> {} but {} -> {}",
                d.word, d.left, d.left_target, d.right, d.right_target
            )?;
        }
        let verdict = match (self.is_confluent(), self.partial) {
            (false, _) => "NOT CONFLUENT",
            (true, false) => "CONFLUENT",
            (true, true) => "INCONCLUSIVE: budget reached before the search finished",
        };
        write!(f, "{verdict}")
    }
}

struct Completion {
    target: BraidWord,
    key: NormalForm,
    cancels: usize,
}

fn complete(n: usize, v: &[usize], memo: &mut HashMap<Vec<usize>, Completion>) -> Result<(), RewriteError> {
    if !memo.contains_key(v) {
        let w = BraidWord::from_indices_unchecked(n, v);
        let t = complete_reduce(&w)?;
        let key = normal_form(&t.target)?;
        memo.insert(
            v.to_vec(),
            Completion {
                cancels: t.cancel_count(),
                target: t.target,
                key,
            },
        );
    }
    Ok(())
}

/// Explore up to `budget` words reachable from `w` by YB, C and V steps.
pub fn check_confluence(w: &BraidWord, budget: usize) -> Result<ConfluenceReport, RewriteError> {
    w.require_positive()?;
    let n = w.strands();
    let start = w.indices();
    let mut memo: HashMap<Vec<usize>, Completion> = HashMap::new();
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    let mut partial = false;
    let mut states = 0;
    let mut diamonds = 0;
    let mut failures = Vec::new();
    let mut cancellations = BTreeSet::new();
    complete(n, &start, &mut memo)?;
    let reference = memo[&start].key.clone();
    let reference_target = memo[&start].target.clone();
    let mut targets_agree = true;

    while let Some(cur) = queue.pop_front() {
        states += 1;
        complete(n, &cur, &mut memo)?;
        let c = &memo[&cur];
        targets_agree &= c.key == reference;
        cancellations.insert((start.len() - cur.len()) / 2 + c.cancels);

        let steps: Vec<(BasicReduction, Vec<usize>)> = redexes_of(&cur)
            .into_iter()
            .map(|r| {
                let mut next = cur.clone();
                apply_unchecked(&mut next, &r);
                (r, next)
            })
            .collect();
        for (_, next) in &steps {
            complete(n, next, &mut memo)?;
        }
        for (a, (ra, wa)) in steps.iter().enumerate() {
            for (rb, wb) in &steps[a + 1..] {
                diamonds += 1;
                let (ca, cb) = (&memo[wa], &memo[wb]);
                if ca.key != cb.key {
                    failures.push(DiamondFailure {
                        word: BraidWord::from_indices_unchecked(n, &cur).to_string(),
                        left: ra.to_string(),
                        right: rb.to_string(),
                        left_target: ca.target.to_string(),
                        right_target: cb.target.to_string(),
                    });
                }
            }
        }
        for (_, next) in steps {
            if seen.contains(&next) {
                continue;
            }
            if seen.len() >= budget {
                partial = true;
                continue;
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }

    Ok(ConfluenceReport {
        word: w.to_string(),
        states_explored: states,
        partial,
        targets_agree,
        target: reference_target.to_string(),
        cancellations,
        diamonds_checked: diamonds,
        failures,
    })
}
