//! Finding chains of length-preserving moves (YB and C) between monoid-equal words.

use std::collections::{HashMap, VecDeque};

use super::{apply_unchecked, redexes_of, BasicReduction, RewriteError};
use crate::braid::BraidWord;

/// A strategy for connecting two positive words by YB and C moves.
pub trait MovePathFinder {
    fn find_path(&self, from: &BraidWord, to: &BraidWord) -> Result<Vec<BasicReduction>, RewriteError>;
}

fn no_path(from: &BraidWord, to: &BraidWord) -> RewriteError {
    RewriteError::NoMovePath {
        from: from.to_string(),
        to: to.to_string(),
    }
}

/// Letter-by-letter construction: pull each letter of the target to the front of the
/// remaining suffix.
///
/// If `σ_j u = σ_k u'` with `j ≠ k`, then `u` starts with `σ_k` when the generators are
/// distant, and with `σ_k σ_j` when they are adjacent; the recursion follows that.
#[derive(Debug, Clone, Copy)]
pub struct ConstructivePaths {
    pub max_steps: usize,
}

impl Default for ConstructivePaths {
    fn default() -> Self {
        ConstructivePaths { max_steps: 1 << 22 }
    }
}

enum Stuck {
    NoPath,
    Budget,
}

impl ConstructivePaths {
    fn bring_to_front(
        &self,
        v: &mut Vec<usize>,
        start: usize,
        k: usize,
        out: &mut Vec<BasicReduction>,
    ) -> Result<(), Stuck> {
        let Some(&j) = v.get(start) else {
            return Err(Stuck::NoPath);
        };
        if j == k {
            return Ok(());
        }
        if out.len() >= self.max_steps {
            return Err(Stuck::Budget);
        }
        let step = if j.abs_diff(k) >= 2 {
            self.bring_to_front(v, start + 1, k, out)?;
            BasicReduction::Commute {
                at: start,
                left: j,
                right: k,
            }
        } else {
            self.bring_to_front(v, start + 1, k, out)?;
            self.bring_to_front(v, start + 2, j, out)?;
            if k == j + 1 {
                BasicReduction::YbUp { at: start }
            } else {
                BasicReduction::YbDown { at: start }
            }
        };
        apply_unchecked(v, &step);
        out.push(step);
        Ok(())
    }
}

impl MovePathFinder for ConstructivePaths {
    fn find_path(&self, from: &BraidWord, to: &BraidWord) -> Result<Vec<BasicReduction>, RewriteError> {
        from.require_positive()?;
        to.require_positive()?;
        if from.strands() != to.strands() || from.len() != to.len() {
            return Err(no_path(from, to));
        }
        let target = to.indices();
        let mut v = from.indices();
        let mut out = Vec::new();
        for (p, &k) in target.iter().enumerate() {
            match self.bring_to_front(&mut v, p, k, &mut out) {
                Ok(()) => {}
                Err(Stuck::NoPath) => return Err(no_path(from, to)),
                Err(Stuck::Budget) => {
                    return Err(RewriteError::PathBudget {
                        budget: self.max_steps,
                    })
                }
            }
        }
        debug_assert_eq!(v, target);
        Ok(out)
    }
}

/// Breadth-first search over the YB/C graph. Finds a shortest path; exponential in general.
#[derive(Debug, Clone, Copy)]
pub struct BfsPaths {
    pub budget: usize,
}

impl Default for BfsPaths {
    fn default() -> Self {
        BfsPaths { budget: 200_000 }
    }
}

impl MovePathFinder for BfsPaths {
    fn find_path(&self, from: &BraidWord, to: &BraidWord) -> Result<Vec<BasicReduction>, RewriteError> {
        from.require_positive()?;
        to.require_positive()?;
        if from.strands() != to.strands() || from.len() != to.len() {
            return Err(no_path(from, to));
        }
        let start = from.indices();
        let goal = to.indices();
        let mut parent: HashMap<Vec<usize>, Option<(Vec<usize>, BasicReduction)>> = HashMap::new();
        parent.insert(start.clone(), None);
        let mut queue = VecDeque::from([start]);
        while let Some(cur) = queue.pop_front() {
            if cur == goal {
                let mut path = Vec::new();
                let mut node = cur;
                while let Some(Some((prev, step))) = parent.get(&node).cloned() {
                    path.push(step);
                    node = prev;
                }
                path.reverse();
                return Ok(path);
            }
            for r in redexes_of(&cur).into_iter().filter(|r| !r.is_cancel()) {
                let mut next = cur.clone();
                apply_unchecked(&mut next, &r);
                if parent.contains_key(&next) {
                    continue;
                }
                if parent.len() >= self.budget {
                    return Err(RewriteError::PathBudget { budget: self.budget });
                }
                parent.insert(next.clone(), Some((cur.clone(), r)));
                queue.push_back(next);
            }
        }
        Err(no_path(from, to))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{positive_class_with_default, permutation_braid, Permutation};
    use crate::rewrite::apply_basic;

    fn word(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn replay(from: &BraidWord, path: &[BasicReduction]) -> BraidWord {
        path.iter().fold(from.clone(), |w, s| apply_basic(&w, s).unwrap())
    }

    #[test]
    fn both_finders_connect_the_whole_class() {
        let w = permutation_braid(&Permutation::new(vec![4, 3, 2, 1]).unwrap());
        let class = positive_class_with_default(&w).unwrap();
        for finder in [&ConstructivePaths::default() as &dyn MovePathFinder, &BfsPaths::default()] {
            for to in &class {
                let path = finder.find_path(&w, to).unwrap();
                assert_eq!(&replay(&w, &path), to);
            }
        }
    }

    #[test]
    fn bfs_is_shortest() {
        let path = BfsPaths::default()
            .find_path(&word("3: s1 s2 s1"), &word("3: s2 s1 s2"))
            .unwrap();
        assert_eq!(path, [BasicReduction::YbUp { at: 0 }]);
    }

    #[test]
    fn unequal_words_have_no_path() {
        for finder in [&ConstructivePaths::default() as &dyn MovePathFinder, &BfsPaths::default()] {
            let e = finder.find_path(&word("3: s1 s2"), &word("3: s2 s1")).unwrap_err();
            assert!(matches!(e, RewriteError::NoMovePath { .. }));
        }
    }

    #[test]
    fn budgets_are_reported() {
        let w = permutation_braid(&Permutation::new(vec![5, 4, 3, 2, 1]).unwrap());
        let to = word("5: s4 s3 s4 s2 s3 s4 s1 s2 s3 s4");
        let e = BfsPaths { budget: 5 }.find_path(&w, &to).unwrap_err();
        assert_eq!(e, RewriteError::PathBudget { budget: 5 });
        let e = ConstructivePaths { max_steps: 1 }.find_path(&w, &to).unwrap_err();
        assert_eq!(e, RewriteError::PathBudget { budget: 1 });
    }
}
