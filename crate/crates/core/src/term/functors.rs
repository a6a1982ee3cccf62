use super::{typecheck, CellExpr, TermError};
use crate::braid::{BraidWord, Permutation};

/// The positive braid moving a block of `p` strands over a block of `q` strands: each of the
/// `p` strands, rightmost first, crosses the whole `q` block.
pub fn block_braid(p: usize, q: usize) -> BraidWord {
    let mut indices = Vec::with_capacity(p * q);
    for k in (1..=p).rev() {
        indices.extend(k..k + q);
    }
    BraidWord::positive(p + q, &indices).expect("block braid indices are in range")
}

fn source_width(c: &CellExpr) -> usize {
    match c {
        CellExpr::Id(x) | CellExpr::LUnit(x) | CellExpr::LUnitInv(x) | CellExpr::RUnit(x) | CellExpr::RUnitInv(x) => {
            x.width()
        }
        CellExpr::Assoc(x, y, z) | CellExpr::AssocInv(x, y, z) => x.width() + y.width() + z.width(),
        CellExpr::Braid(x, y) | CellExpr::BraidInv(x, y) => x.width() + y.width(),
        CellExpr::Compose(_, f) => source_width(f),
        CellExpr::TensorCell(f, g) => source_width(f) + source_width(g),
    }
}

/// The underlying permutation of a well-typed cell, as an arrangement of its source strands.
pub fn pi_functor(c: &CellExpr) -> Permutation {
    match c {
        CellExpr::Braid(x, y) => Permutation::block_swap(x.width(), y.width()),
        CellExpr::BraidInv(x, y) => Permutation::block_swap(y.width(), x.width()),
        CellExpr::Compose(g, f) => pi_functor(f).then(&pi_functor(g)),
        CellExpr::TensorCell(f, g) => pi_functor(f).block_sum(&pi_functor(g)),
        other => Permutation::identity(source_width(other)),
    }
}

fn rho(c: &CellExpr) -> BraidWord {
    match c {
        CellExpr::Braid(x, y) => block_braid(x.width(), y.width()),
        CellExpr::BraidInv(x, y) => block_braid(x.width(), y.width()).inverse(),
        CellExpr::Compose(g, f) => rho(f).concat(&rho(g)).expect("composable cells have equal width"),
        CellExpr::TensorCell(f, g) => {
            let (a, b) = (rho(f), rho(g));
            let n = a.strands() + b.strands();
            a.shifted(0, n)
                .concat(&b.shifted(a.strands(), n))
                .expect("same strand count")
        }
        other => BraidWord::empty(source_width(other)),
    }
}

/// The underlying braid word of a cell. Structural cells contribute nothing, so the word
/// is positive exactly when the cell has no `BraidInv`.
pub fn rho_functor(c: &CellExpr) -> Result<BraidWord, TermError> {
    typecheck(c)?;
    Ok(rho(c))
}

/// Replace every `BraidInv(x, y)` by the braiding `Braid(y, x)` with the same boundary.
pub fn positivize(c: &CellExpr) -> CellExpr {
    match c {
        CellExpr::BraidInv(x, y) => CellExpr::Braid(y.clone(), x.clone()),
        CellExpr::Compose(g, f) => CellExpr::compose(positivize(g), positivize(f)),
        CellExpr::TensorCell(f, g) => CellExpr::tensor(positivize(f), positivize(g)),
        other => other.clone(),
    }
}
