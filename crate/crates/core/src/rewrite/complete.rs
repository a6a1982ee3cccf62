use super::{BasicReduction, ConstructivePaths, MovePathFinder, ReductionTrace, RewriteError};
use crate::braid::{normal_form, permutation_braid, underlying_permutation, BraidWord};

/// Reduce a positive word to a minimal braid, cancelling one double crossing per round.
///
/// Each round splits the current braid as `τ ω` with `τ` the longest minimal prefix. The
/// smallest generator `σ_i` that `ω` can start with is also one `τ` can end with, so the
/// braid equals `τ' σ_i σ_i ω'`; YB/C moves reach that word and a V step removes the pair.
/// A minimal input gives the empty trace.
pub fn complete_reduce(w: &BraidWord) -> Result<ReductionTrace, RewriteError> {
    complete_reduce_with(w, &ConstructivePaths::default())
}

pub fn complete_reduce_with(
    w: &BraidWord,
    finder: &dyn MovePathFinder,
) -> Result<ReductionTrace, RewriteError> {
    w.require_positive()?;
    let n = w.strands();
    let mut trace = ReductionTrace::empty(w);
    loop {
        let nf = normal_form(&trace.target)?;
        let [first, second, rest @ ..] = nf.factors() else {
            return Ok(trace);
        };
        let i = *second
            .inverse()
            .descents()
            .first()
            .expect("normal-form factors are non-trivial");
        debug_assert!(first.has_descent(i), "adjacent factors are left-weighted");
        let tau = permutation_braid(&first.swap_positions(i));
        let mut indices = tau.indices();
        indices.extend([i, i]);
        indices.extend(permutation_braid(&second.swap_values(i)).indices());
        for f in rest {
            indices.extend(permutation_braid(f).indices());
        }
        let staged = BraidWord::from_indices_unchecked(n, &indices);
        let moves = finder.find_path(&trace.target, &staged)?;
        trace.extend(&moves)?;
        trace.extend(&[BasicReduction::Cancel {
            at: tau.len(),
            index: i,
        }])?;
    }
}

/// [`complete_reduce`] followed by moves onto the canonical reduced word of the target's
/// permutation, so that two words with the same permutation end at the same word.
pub fn reduce_to_canonical(w: &BraidWord) -> Result<ReductionTrace, RewriteError> {
    reduce_to_canonical_with(w, &ConstructivePaths::default())
}

pub fn reduce_to_canonical_with(
    w: &BraidWord,
    finder: &dyn MovePathFinder,
) -> Result<ReductionTrace, RewriteError> {
    let mut trace = complete_reduce_with(w, finder)?;
    let canonical = permutation_braid(&underlying_permutation(&trace.target));
    let moves = finder.find_path(&trace.target, &canonical)?;
    trace.extend(&moves)?;
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{is_minimal, monoid_equal};
    use crate::rewrite::{reduction_length, verify_trace, BfsPaths};

    fn word(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn reduces_the_worked_example() {
        let t = complete_reduce(&word("3: s1 s2 s1 s2")).unwrap();
        assert_eq!(t.target.to_string(), "3: s2 s1");
        assert_eq!(
            t.steps,
            [BasicReduction::YbUp { at: 0 }, BasicReduction::Cancel { at: 2, index: 2 }]
        );
        assert!(verify_trace(&t).is_valid());
    }

    #[test]
    fn powers_of_one_generator() {
        let t = complete_reduce(&word("2: s1 s1 s1 s1")).unwrap();
        assert_eq!(reduction_length(&t), 2);
        assert!(t.target.is_empty());
        let t = complete_reduce(&word("2: s1 s1 s1")).unwrap();
        assert_eq!(t.target.to_string(), "2: s1");
    }

    #[test]
    fn minimal_words_are_left_alone() {
        let w = word("4: s1 s3 s2");
        assert_eq!(complete_reduce(&w).unwrap(), ReductionTrace::empty(&w));
        assert_eq!(complete_reduce(&word("0:")).unwrap().steps, []);
    }

    #[test]
    fn bfs_finder_agrees() {
        let w = word("4: s2 s1 s3 s2 s2 s3 s1 s2");
        let a = complete_reduce(&w).unwrap();
        let b = complete_reduce_with(&w, &BfsPaths::default()).unwrap();
        assert!(verify_trace(&a).is_valid() && verify_trace(&b).is_valid());
        assert!(monoid_equal(&a.target, &b.target).unwrap());
        assert!(is_minimal(&a.target).unwrap());
        assert_eq!(reduction_length(&a), reduction_length(&b));
    }

    #[test]
    fn canonical_target() {
        let a = reduce_to_canonical(&word("3: s1 s2 s1")).unwrap();
        let b = reduce_to_canonical(&word("3: s2 s1 s2 s2 s2")).unwrap();
        assert_eq!(a.target, b.target);
        assert_eq!(a.target.to_string(), "3: s1 s2 s1");
        assert!(verify_trace(&b).is_valid());
    }

    #[test]
    fn rejects_negative_input() {
        assert!(complete_reduce(&word("3: s1 S2")).is_err());
    }
}
