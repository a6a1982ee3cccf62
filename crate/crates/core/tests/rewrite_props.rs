mod common;

use braidcoh::braid::{
    finishing_set, is_minimal, left_weighted_factorization, monoid_equal, normal_form, permutation_braid,
    positive_class, starting_set, underlying_permutation, yb_c_neighbours, BraidWord, Permutation,
};
use braidcoh::rewrite::{
    apply_basic, check_confluence, complete_reduce, enumerate_redexes, reduce_to_canonical, reduction_length,
    transfer_marking, verify_trace, BasicReduction, BfsPaths, ConstructivePaths, MovePathFinder, ReductionTrace,
};
use common::{random_marking, rng};
use proptest::prelude::*;
use rand::Rng;

fn positive_word(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(1..n, 0..=max_len).prop_map(move |v| BraidWord::positive(n, &v).unwrap())
    })
}

/// Scramble `w` by `k` random YB/C moves.
fn scramble(w: &BraidWord, k: usize, seed: u64) -> BraidWord {
    let mut r = rng(seed);
    let mut v = w.indices();
    for _ in 0..k {
        let next = yb_c_neighbours(&v);
        if next.is_empty() {
            break;
        }
        v = next[r.gen_range(0..next.len())].clone();
    }
    BraidWord::positive(w.strands(), &v).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn complete_reduction_lands_on_the_permutation_braid(w in positive_word(6, 12)) {
        let t = complete_reduce(&w).unwrap();
        let pi = underlying_permutation(&w);
        prop_assert!(is_minimal(&t.target).unwrap());
        prop_assert!(monoid_equal(&t.target, &permutation_braid(&pi)).unwrap());
        prop_assert_eq!(2 * reduction_length(&t), w.len() - pi.inversions());
        prop_assert!(verify_trace(&t).is_valid());
        prop_assert_eq!(ReductionTrace::parse(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn canonical_reduction_pins_the_target(w in positive_word(5, 10)) {
        let t = reduce_to_canonical(&w).unwrap();
        prop_assert_eq!(&t.target, &permutation_braid(&underlying_permutation(&w)));
        prop_assert!(verify_trace(&t).is_valid());
    }

    #[test]
    fn normal_form_is_invariant_under_moves(w in positive_word(5, 10), k in 0usize..30, seed in any::<u64>()) {
        let v = scramble(&w, k, seed);
        prop_assert_eq!(normal_form(&v).unwrap(), normal_form(&w).unwrap());
        prop_assert!(monoid_equal(&v, &w).unwrap());
        prop_assert_eq!(starting_set(&v).unwrap(), starting_set(&w).unwrap());
        prop_assert_eq!(finishing_set(&v).unwrap(), finishing_set(&w).unwrap());
    }

    #[test]
    fn move_paths_replay(w in positive_word(5, 9), k in 0usize..20, seed in any::<u64>()) {
        let v = scramble(&w, k, seed);
        for path in [ConstructivePaths::default().find_path(&w, &v).unwrap(), BfsPaths::default().find_path(&w, &v).unwrap()] {
            let mut cur = w.clone();
            for step in &path {
                prop_assert!(!step.is_cancel());
                cur = apply_basic(&cur, step).unwrap();
            }
            prop_assert_eq!(&cur, &v);
        }
    }

    #[test]
    fn factorization_contract(w in positive_word(5, 10)) {
        let f = left_weighted_factorization(&w).unwrap();
        prop_assert!(is_minimal(&f.tau).unwrap());
        prop_assert!(starting_set(&f.omega).unwrap().is_subset(&finishing_set(&f.tau).unwrap()));
        prop_assert!(monoid_equal(&f.tau.concat(&f.omega).unwrap(), &w).unwrap());
    }

    #[test]
    fn permutation_algebra(a in prop::collection::vec(1usize..5, 0..8), b in prop::collection::vec(1usize..5, 0..8)) {
        let (wa, wb) = (BraidWord::positive(5, &a).unwrap(), BraidWord::positive(5, &b).unwrap());
        let (pa, pb) = (underlying_permutation(&wa), underlying_permutation(&wb));
        prop_assert_eq!(underlying_permutation(&wa.concat(&wb).unwrap()), pa.then(&pb));
        prop_assert!(pa.then(&pa.inverse()).is_identity());
        prop_assert_eq!(permutation_braid(&pa).len(), pa.inversions());
        prop_assert_eq!(underlying_permutation(&permutation_braid(&pa)), pa);
    }

    #[test]
    fn marking_transfer_round_trips(w in positive_word(5, 10), seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = random_marking(&mut r, &w);
        for red in enumerate_redexes(&w).unwrap().into_iter().filter(|x| !x.is_cancel()) {
            let moved = transfer_marking(&m, &w, &red).unwrap();
            let w2 = apply_basic(&w, &red).unwrap();
            moved.validate_on(&w2).unwrap();
            let back = transfer_marking(&moved, &w2, &red.inverse().unwrap()).unwrap();
            prop_assert_eq!(&back, &m);
        }
    }

    #[test]
    fn printed_words_reparse(n in 1usize..7, v in prop::collection::vec((1usize..6, any::<bool>()), 0..10)) {
        let letters: Vec<_> = v.iter().filter(|(i, _)| *i < n)
            .map(|&(i, p)| if p { braidcoh::braid::Letter::pos(i) } else { braidcoh::braid::Letter::neg(i) })
            .collect();
        let w = BraidWord::new(n, letters).unwrap();
        prop_assert_eq!(BraidWord::parse(&w.to_string()).unwrap(), w);
    }
}

#[test]
fn starting_sets_match_the_class_on_small_words() {
    for w in common::exhaustive_corpus(4, 5) {
        let class = positive_class(&w, 100_000).unwrap();
        let firsts = class.iter().filter_map(|v| v.indices().first().copied()).collect();
        assert_eq!(starting_set(&w).unwrap(), firsts, "{w}");
    }
}

#[test]
fn confluence_on_short_words() {
    for s in ["3: s1 s2 s1 s2", "3: s1 s1 s2 s2 s1 s1", "4: s1 s3 s2 s1 s3 s2 s2"] {
        let r = check_confluence(&common::word(s), 50_000).unwrap();
        assert!(r.is_confluent() && !r.partial, "{r}");
    }
}

#[test]
fn tampered_traces_fail() {
    let mut t = complete_reduce(&common::word("3: s1 s2 s1 s2")).unwrap();
    assert!(verify_trace(&t).is_valid());
    t.steps[0] = BasicReduction::YbDown { at: 0 };
    assert!(!verify_trace(&t).is_valid());
    let id = Permutation::identity(3);
    assert!(verify_trace(&ReductionTrace::empty(&permutation_braid(&id))).is_valid());
}
