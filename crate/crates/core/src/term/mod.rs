//! Objects and 1-cells of the free symmetric monoidal bicategory on a set of labels, the
//! functors to permutations (`π`) and to braids (`ρ`), positivization, and the coherence
//! decision procedure with replayable certificates.
//!
//! Typing of the braiding cells: `(braid x y)` is `x ⊗ y → y ⊗ x`, and `(braid* x y)` is the
//! pseudo-inverse of `(braid x y)`, so it runs `y ⊗ x → x ⊗ y`.

mod certificate;
mod functors;
mod parse;

use std::fmt;

use thiserror::Error;

use crate::braid::Permutation;
use crate::rewrite::RewriteError;
use crate::syntax::ParseError;

pub use certificate::{coherent, verify_certificate, Certificate, CertificateVerdict, Coherence};
pub use functors::{block_braid, pi_functor, positivize, rho_functor};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TermError {
    #[error("ill-typed composite at {path}: target of f is `{found}` but source of g is `{expected}`")]
    TypeMismatch {
        path: String,
        expected: String,
        found: String,
    },
    #[error("cells are not parallel: `{f_source} -> {f_target}` vs `{g_source} -> {g_target}`")]
    NotParallel {
        f_source: String,
        f_target: String,
        g_source: String,
        g_target: String,
    },
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ObjExpr {
    Unit,
    Gen(String),
    Tensor(Box<ObjExpr>, Box<ObjExpr>),
}

impl ObjExpr {
    pub fn gen(label: &str) -> Self {
        ObjExpr::Gen(label.to_string())
    }

    pub fn tensor(left: ObjExpr, right: ObjExpr) -> Self {
        ObjExpr::Tensor(Box::new(left), Box::new(right))
    }

    /// Number of generator leaves.
    pub fn width(&self) -> usize {
        match self {
            ObjExpr::Unit => 0,
            ObjExpr::Gen(_) => 1,
            ObjExpr::Tensor(l, r) => l.width() + r.width(),
        }
    }

    pub fn parse(text: &str) -> Result<ObjExpr, ParseError> {
        parse::parse_obj(text)
    }
}

/// In-order generator labels; units contribute nothing.
pub fn flatten(x: &ObjExpr) -> Vec<String> {
    fn go(x: &ObjExpr, out: &mut Vec<String>) {
        match x {
            ObjExpr::Unit => {}
            ObjExpr::Gen(l) => out.push(l.clone()),
            ObjExpr::Tensor(l, r) => {
                go(l, out);
                go(r, out);
            }
        }
    }
    let mut out = Vec::new();
    go(x, &mut out);
    out
}

impl fmt::Display for ObjExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjExpr::Unit => write!(f, "I"),
            ObjExpr::Gen(l) => write!(f, "{l}"),
            ObjExpr::Tensor(l, r) => write!(f, "(tensor {l} {r})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CellExpr {
    Id(ObjExpr),
    /// `(x ⊗ y) ⊗ z → x ⊗ (y ⊗ z)`
    Assoc(ObjExpr, ObjExpr, ObjExpr),
    AssocInv(ObjExpr, ObjExpr, ObjExpr),
    /// `I ⊗ x → x`
    LUnit(ObjExpr),
    LUnitInv(ObjExpr),
    /// `x ⊗ I → x`
    RUnit(ObjExpr),
    RUnitInv(ObjExpr),
    /// `x ⊗ y → y ⊗ x`
    Braid(ObjExpr, ObjExpr),
    /// `y ⊗ x → x ⊗ y`, the pseudo-inverse of `Braid(x, y)`
    BraidInv(ObjExpr, ObjExpr),
    /// `Compose(g, f)` is `g ∘ f`: `f` first.
    Compose(Box<CellExpr>, Box<CellExpr>),
    TensorCell(Box<CellExpr>, Box<CellExpr>),
}

fn t(l: &ObjExpr, r: &ObjExpr) -> ObjExpr {
    ObjExpr::tensor(l.clone(), r.clone())
}

impl CellExpr {
    pub fn compose(g: CellExpr, f: CellExpr) -> Self {
        CellExpr::Compose(Box::new(g), Box::new(f))
    }

    pub fn tensor(f: CellExpr, g: CellExpr) -> Self {
        CellExpr::TensorCell(Box::new(f), Box::new(g))
    }

    pub fn parse(text: &str) -> Result<CellExpr, ParseError> {
        parse::parse_cell(text)
    }

    /// Number of constructor nodes.
    pub fn size(&self) -> usize {
        match self {
            CellExpr::Compose(g, f) | CellExpr::TensorCell(g, f) => 1 + g.size() + f.size(),
            _ => 1,
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            CellExpr::Compose(g, f) | CellExpr::TensorCell(g, f) => 1 + g.depth().max(f.depth()),
            _ => 1,
        }
    }
}

impl fmt::Display for CellExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellExpr::Id(x) => write!(f, "(id {x})"),
            CellExpr::Assoc(x, y, z) => write!(f, "(assoc {x} {y} {z})"),
            CellExpr::AssocInv(x, y, z) => write!(f, "(assoc* {x} {y} {z})"),
            CellExpr::LUnit(x) => write!(f, "(lunit {x})"),
            CellExpr::LUnitInv(x) => write!(f, "(lunit* {x})"),
            CellExpr::RUnit(x) => write!(f, "(runit {x})"),
            CellExpr::RUnitInv(x) => write!(f, "(runit* {x})"),
            CellExpr::Braid(x, y) => write!(f, "(braid {x} {y})"),
            CellExpr::BraidInv(x, y) => write!(f, "(braid* {x} {y})"),
            CellExpr::Compose(g, h) => write!(f, "(comp {g} {h})"),
            CellExpr::TensorCell(g, h) => write!(f, "(ten {g} {h})"),
        }
    }
}

/// Source and target of a well-typed cell. Composites need the target of `f` and the source
/// of `g` to agree as trees; errors name the composite by its path from the root, e.g.
/// `root/comp.f/ten.left`.
pub fn typecheck(c: &CellExpr) -> Result<(ObjExpr, ObjExpr), TermError> {
    typecheck_at(c, "root")
}

fn typecheck_at(c: &CellExpr, path: &str) -> Result<(ObjExpr, ObjExpr), TermError> {
    Ok(match c {
        CellExpr::Id(x) => (x.clone(), x.clone()),
        CellExpr::Assoc(x, y, z) => (t(&t(x, y), z), t(x, &t(y, z))),
        CellExpr::AssocInv(x, y, z) => (t(x, &t(y, z)), t(&t(x, y), z)),
        CellExpr::LUnit(x) => (t(&ObjExpr::Unit, x), x.clone()),
        CellExpr::LUnitInv(x) => (x.clone(), t(&ObjExpr::Unit, x)),
        CellExpr::RUnit(x) => (t(x, &ObjExpr::Unit), x.clone()),
        CellExpr::RUnitInv(x) => (x.clone(), t(x, &ObjExpr::Unit)),
        CellExpr::Braid(x, y) => (t(x, y), t(y, x)),
        CellExpr::BraidInv(x, y) => (t(y, x), t(x, y)),
        CellExpr::Compose(g, f) => {
            let (fs, ft) = typecheck_at(f, &format!("{path}/comp.f"))?;
            let (gs, gt) = typecheck_at(g, &format!("{path}/comp.g"))?;
            if ft != gs {
                return Err(TermError::TypeMismatch {
                    path: path.to_string(),
                    expected: gs.to_string(),
                    found: ft.to_string(),
                });
            }
            (fs, gt)
        }
        CellExpr::TensorCell(f, g) => {
            let (fs, ft) = typecheck_at(f, &format!("{path}/ten.left"))?;
            let (gs, gt) = typecheck_at(g, &format!("{path}/ten.right"))?;
            (ObjExpr::tensor(fs, gs), ObjExpr::tensor(ft, gt))
        }
    })
}

/// Whether `f` and `g` have the same flattened source and the same flattened target.
pub fn parallel(f: &CellExpr, g: &CellExpr) -> Result<bool, TermError> {
    let (fs, ft) = typecheck(f)?;
    let (gs, gt) = typecheck(g)?;
    Ok(flatten(&fs) == flatten(&gs) && flatten(&ft) == flatten(&gt))
}

pub(crate) fn require_parallel(f: &CellExpr, g: &CellExpr) -> Result<(), TermError> {
    let (fs, ft) = typecheck(f)?;
    let (gs, gt) = typecheck(g)?;
    if flatten(&fs) == flatten(&gs) && flatten(&ft) == flatten(&gt) {
        Ok(())
    } else {
        Err(TermError::NotParallel {
            f_source: fs.to_string(),
            f_target: ft.to_string(),
            g_source: gs.to_string(),
            g_target: gt.to_string(),
        })
    }
}

/// Permutation of a cell, with a typecheck first.
pub fn permutation_of(c: &CellExpr) -> Result<Permutation, TermError> {
    typecheck(c)?;
    Ok(pi_functor(c))
}
