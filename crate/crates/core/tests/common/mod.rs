//! Shared generators for the integration and acceptance tests.
#![allow(dead_code)]

use braidcoh::braid::BraidWord;
use braidcoh::rewrite::Marking;
use braidcoh::term::{typecheck, CellExpr, ObjExpr};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub mod golden;

pub use rand::SeedableRng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn word(s: &str) -> BraidWord {
    BraidWord::parse(s).unwrap_or_else(|e| panic!("bad word `{s}`: {e}"))
}

/// Every positive word on `n` strands of length exactly `len`.
pub fn all_positive_words(n: usize, len: usize) -> Vec<BraidWord> {
    if n < 2 {
        return if len == 0 { vec![BraidWord::empty(n)] } else { vec![] };
    }
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<usize>| {
                (1..n).map(move |i| {
                    let mut v = w.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
    }
    out.iter().map(|v| BraidWord::positive(n, v).unwrap()).collect()
}

/// Every positive word with at most `max_n` strands and length at most `max_len`.
pub fn exhaustive_corpus(max_n: usize, max_len: usize) -> Vec<BraidWord> {
    (1..=max_n)
        .flat_map(|n| (0..=max_len).flat_map(move |len| all_positive_words(n, len)))
        .collect()
}

pub fn random_positive_word(rng: &mut TestRng, max_n: usize, max_len: usize) -> BraidWord {
    let n = rng.gen_range(2..=max_n);
    let len = rng.gen_range(0..=max_len);
    let v: Vec<usize> = (0..len).map(|_| rng.gen_range(1..n)).collect();
    BraidWord::positive(n, &v).unwrap()
}

/// A marking with up to `len / 2` labels on distinct random positions.
pub fn random_marking(rng: &mut TestRng, w: &BraidWord) -> Marking {
    let mut positions: Vec<usize> = (0..w.len()).collect();
    positions.shuffle(rng);
    let pairs = rng.gen_range(0..=w.len() / 2);
    let mut m = Marking::new();
    for k in 0..pairs {
        let (a, b) = (positions[2 * k], positions[2 * k + 1]);
        m = m.with(&format!("m{k}"), a.min(b), a.max(b)).unwrap();
    }
    m
}

/// A random bracketing of `labels`, with a unit factor inserted now and then.
pub fn random_object(rng: &mut TestRng, labels: &[String]) -> ObjExpr {
    let base = match labels.len() {
        0 => ObjExpr::Unit,
        1 => ObjExpr::gen(&labels[0]),
        n => {
            let cut = rng.gen_range(1..n);
            ObjExpr::tensor(random_object(rng, &labels[..cut]), random_object(rng, &labels[cut..]))
        }
    };
    match rng.gen_range(0..12) {
        0 => ObjExpr::tensor(ObjExpr::Unit, base),
        1 => ObjExpr::tensor(base, ObjExpr::Unit),
        _ => base,
    }
}

/// Labels drawn from a small alphabet so repeated generators are common.
pub fn random_labels(rng: &mut TestRng, max_gens: usize) -> Vec<String> {
    let k = rng.gen_range(1..=max_gens);
    let alphabet = rng.gen_range(1..=4u8);
    (0..k)
        .map(|_| ((b'a' + rng.gen_range(0..alphabet)) as char).to_string())
        .collect()
}

/// A random well-typed cell with the given source, and its target.
pub fn random_cell(rng: &mut TestRng, source: &ObjExpr, depth: usize) -> (CellExpr, ObjExpr) {
    let mut options: Vec<u8> = vec![0];
    if let ObjExpr::Tensor(l, r) = source {
        options.extend([1, 2]);
        if depth > 0 {
            options.extend([3, 3]);
        }
        if matches!(**l, ObjExpr::Tensor(..)) {
            options.push(4);
        }
        if matches!(**r, ObjExpr::Tensor(..)) {
            options.push(5);
        }
        if **l == ObjExpr::Unit {
            options.push(6);
        }
        if **r == ObjExpr::Unit {
            options.push(7);
        }
    }
    if depth > 0 {
        options.extend([8, 8, 8, 9]);
    }
    let choice = *options.choose(rng).unwrap();
    let parts = match source {
        ObjExpr::Tensor(l, r) => Some(((**l).clone(), (**r).clone())),
        _ => None,
    };
    let cell = match (choice, parts) {
        (1, Some((l, r))) => CellExpr::Braid(l, r),
        (2, Some((l, r))) => CellExpr::BraidInv(r, l),
        (3, Some((l, r))) => {
            let (f, _) = random_cell(rng, &l, depth - 1);
            let (g, _) = random_cell(rng, &r, depth - 1);
            CellExpr::tensor(f, g)
        }
        (4, Some((ObjExpr::Tensor(x, y), r))) => CellExpr::Assoc(*x, *y, r),
        (5, Some((l, ObjExpr::Tensor(y, z)))) => CellExpr::AssocInv(l, *y, *z),
        (6, Some((_, r))) => CellExpr::LUnit(r),
        (7, Some((l, _))) => CellExpr::RUnit(l),
        (8, _) => {
            let (f, mid) = random_cell(rng, source, depth - 1);
            let (g, _) = random_cell(rng, &mid, depth - 1);
            CellExpr::compose(g, f)
        }
        (9, _) => {
            if rng.gen_bool(0.5) {
                CellExpr::LUnitInv(source.clone())
            } else {
                CellExpr::RUnitInv(source.clone())
            }
        }
        _ => CellExpr::Id(source.clone()),
    };
    let (_, target) = typecheck(&cell).expect("generator builds well-typed cells");
    (cell, target)
}

pub fn random_term(rng: &mut TestRng) -> CellExpr {
    let labels = random_labels(rng, 6);
    let source = random_object(rng, &labels);
    let depth = rng.gen_range(0..=6);
    random_cell(rng, &source, depth).0
}

fn right_nest(labels: &[String]) -> ObjExpr {
    match labels {
        [] => ObjExpr::Unit,
        [x] => ObjExpr::gen(x),
        [x, rest @ ..] => ObjExpr::tensor(ObjExpr::gen(x), right_nest(rest)),
    }
}

fn labels_of(x: &ObjExpr) -> Vec<String> {
    braidcoh::term::flatten(x)
}

fn then(g: CellExpr, f: Option<CellExpr>) -> CellExpr {
    match f {
        None => g,
        Some(f) => CellExpr::compose(g, f),
    }
}

/// A cell from `x` (with at least one generator) to the right-nested form of its labels.
fn normalize(x: &ObjExpr) -> CellExpr {
    match x {
        ObjExpr::Unit => unreachable!("normalize needs a generator"),
        ObjExpr::Gen(_) => CellExpr::Id(x.clone()),
        ObjExpr::Tensor(l, r) if **l == ObjExpr::Unit => then(normalize(r), Some(CellExpr::LUnit((**r).clone()))),
        ObjExpr::Tensor(l, r) if **r == ObjExpr::Unit => then(normalize(l), Some(CellExpr::RUnit((**l).clone()))),
        ObjExpr::Tensor(l, r) if labels_of(l).is_empty() => {
            let (c, _) = strip_empty(l);
            let drop = CellExpr::compose(CellExpr::LUnit((**r).clone()), CellExpr::tensor(c, CellExpr::Id((**r).clone())));
            then(normalize(r), Some(drop))
        }
        ObjExpr::Tensor(l, r) if labels_of(r).is_empty() => {
            let (c, _) = strip_empty(r);
            let drop = CellExpr::compose(CellExpr::RUnit((**l).clone()), CellExpr::tensor(CellExpr::Id((**l).clone()), c));
            then(normalize(l), Some(drop))
        }
        ObjExpr::Tensor(l, r) => {
            let (ll, rl) = (labels_of(l), labels_of(r));
            let both = CellExpr::tensor(normalize(l), normalize(r));
            then(append(&ll, &rl), Some(both))
        }
    }
}

/// A cell from a label-free object to `I`.
fn strip_empty(x: &ObjExpr) -> (CellExpr, ObjExpr) {
    match x {
        ObjExpr::Unit => (CellExpr::Id(ObjExpr::Unit), ObjExpr::Unit),
        ObjExpr::Tensor(l, r) => {
            let (a, _) = strip_empty(l);
            let (b, _) = strip_empty(r);
            let both = CellExpr::tensor(a, b);
            (CellExpr::compose(CellExpr::LUnit(ObjExpr::Unit), both), ObjExpr::Unit)
        }
        ObjExpr::Gen(_) => unreachable!("object has a generator"),
    }
}

/// `nest(left) ⊗ nest(right) → nest(left ++ right)` by associators.
fn append(left: &[String], right: &[String]) -> CellExpr {
    let r = right_nest(right);
    match left {
        [] => unreachable!(),
        [x] => CellExpr::Id(ObjExpr::tensor(ObjExpr::gen(x), r)),
        [x, rest @ ..] => {
            let a = CellExpr::Assoc(ObjExpr::gen(x), right_nest(rest), r);
            CellExpr::compose(CellExpr::tensor(CellExpr::Id(ObjExpr::gen(x)), append(rest, right)), a)
        }
    }
}

/// Swap positions `i` and `i + 1` of a right-nested list.
fn adjacent_swap(rng: &mut TestRng, labels: &[String], i: usize) -> CellExpr {
    if i > 0 {
        let tail = adjacent_swap(rng, &labels[1..], i - 1);
        return CellExpr::tensor(CellExpr::Id(ObjExpr::gen(&labels[0])), tail);
    }
    let (x, y) = (ObjExpr::gen(&labels[0]), ObjExpr::gen(&labels[1]));
    let braid = if rng.gen_bool(0.5) {
        CellExpr::Braid(x.clone(), y.clone())
    } else {
        CellExpr::BraidInv(y.clone(), x.clone())
    };
    if labels.len() == 2 {
        return braid;
    }
    let rest = right_nest(&labels[2..]);
    let down = CellExpr::AssocInv(x.clone(), y.clone(), rest.clone());
    let up = CellExpr::Assoc(y, x, rest.clone());
    CellExpr::compose(up, CellExpr::compose(CellExpr::tensor(braid, CellExpr::Id(rest)), down))
}

/// A cell from `x` to `y` when both carry the same labels up to order. Among equal labels the
/// one moved into place is chosen at random, so the permutation varies.
pub fn random_sorting_cell(rng: &mut TestRng, x: &ObjExpr, y: &ObjExpr) -> CellExpr {
    let mut current = labels_of(x);
    let goal = labels_of(y);
    let mut cell = normalize(x);
    for k in 0..goal.len() {
        let candidates: Vec<usize> = (k..current.len()).filter(|&j| current[j] == goal[k]).collect();
        let mut j = *candidates.choose(rng).expect("same labels");
        while j > k {
            let step = adjacent_swap(rng, &current, j - 1);
            current.swap(j - 1, j);
            cell = CellExpr::compose(step, cell);
            j -= 1;
        }
    }
    cell
}

/// Two well-typed parallel cells. The second one is a random cell followed by a sorting cell,
/// so its permutation sometimes agrees with the first one's and sometimes does not.
pub fn random_parallel_pair(rng: &mut TestRng) -> (CellExpr, CellExpr) {
    let labels = random_labels(rng, 6);
    let source = random_object(rng, &labels);
    let (df, dg) = (rng.gen_range(0..=5), rng.gen_range(0..=3));
    let (f, target) = random_cell(rng, &source, df);
    let (g0, mid) = random_cell(rng, &source, dg);
    let g = CellExpr::compose(random_sorting_cell(rng, &mid, &target), g0);
    if rng.gen_bool(0.5) {
        (f, g)
    } else {
        (g, f)
    }
}
