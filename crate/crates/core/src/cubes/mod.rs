//! Little cubes: configurations of disjoint axis-aligned sub-cubes of the unit cube, operad
//! composition, and numeric checks of explicit paths and homotopies of configurations.
//!
//! Coordinates are generic: exact rationals for the operad algebra, `f64` for the
//! trigonometric paths.

mod paths;
mod verify;

use std::fmt;

use num_rational::Rational64;
use num_traits::{Num, ToPrimitive};
use thiserror::Error;

pub use paths::{NamedPath, PathId, DEFAULT_SIDE};
pub use verify::{verify_homotopy, CheckResult, HomotopyReport, DEFAULT_GRID, DEFAULT_TOL};

/// Numbers cubes can be built from.
pub trait Scalar: Num + PartialOrd + Clone + fmt::Debug + fmt::Display {}

impl<T: Num + PartialOrd + Clone + fmt::Debug + fmt::Display> Scalar for T {}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CubeError {
    #[error("interval ({lo}, {hi}) on axis {axis} is not a subinterval of [0, 1] with lo < hi")]
    BadInterval { axis: usize, lo: String, hi: String },
    #[error("a little cube needs at least one axis")]
    ZeroDimension,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("outer configuration has {outer} cubes but {inners} inner configurations were given")]
    ArityMismatch { outer: usize, inners: usize },
    #[error("cubes {first} and {second} overlap")]
    Overlap { first: usize, second: usize },
    #[error("parameter {name} = {value} outside [{lo}, {hi}]")]
    OutOfDomain { name: &'static str, value: f64, lo: f64, hi: f64 },
    #[error("expected {expected} parameters, found {found}")]
    ParameterCount { expected: usize, found: usize },
    #[error("unknown path id `{0}`")]
    UnknownPath(String),
}

/// An affine embedding of the unit cube, one increasing interval `(x_i, y_i)` per axis.
#[derive(Debug, Clone, PartialEq)]
pub struct LittleCube<S> {
    intervals: Vec<(S, S)>,
}

impl<S: Scalar> LittleCube<S> {
    pub fn new(intervals: Vec<(S, S)>) -> Result<Self, CubeError> {
        if intervals.is_empty() {
            return Err(CubeError::ZeroDimension);
        }
        for (axis, (lo, hi)) in intervals.iter().enumerate() {
            if !(S::zero() <= *lo && lo < hi && *hi <= S::one()) {
                return Err(CubeError::BadInterval {
                    axis,
                    lo: lo.to_string(),
                    hi: hi.to_string(),
                });
            }
        }
        Ok(LittleCube { intervals })
    }

    /// The whole unit cube.
    pub fn identity(dim: usize) -> Self {
        LittleCube {
            intervals: vec![(S::zero(), S::one()); dim],
        }
    }

    /// The cube with the given center and side length on every axis.
    pub fn centered(center: &[S], side: S) -> Result<Self, CubeError> {
        let two = S::one() + S::one();
        let half = side / two;
        Self::new(
            center
                .iter()
                .map(|c| (c.clone() - half.clone(), c.clone() + half.clone()))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.intervals.len()
    }

    pub fn intervals(&self) -> &[(S, S)] {
        &self.intervals
    }

    pub fn center(&self) -> Vec<S> {
        let two = S::one() + S::one();
        self.intervals
            .iter()
            .map(|(lo, hi)| (lo.clone() + hi.clone()) / two.clone())
            .collect()
    }

    /// `self ∘ inner`: the image of `inner` under this cube's embedding.
    pub fn embed(&self, inner: &LittleCube<S>) -> LittleCube<S> {
        LittleCube {
            intervals: self
                .intervals
                .iter()
                .zip(&inner.intervals)
                .map(|((x0, y0), (x, y))| {
                    let w = y0.clone() - x0.clone();
                    (
                        x0.clone() + w.clone() * x.clone(),
                        x0.clone() + w * y.clone(),
                    )
                })
                .collect(),
        }
    }

    /// Open cubes are disjoint when some axis has disjoint open intervals.
    pub fn disjoint_from(&self, other: &LittleCube<S>) -> bool {
        self.intervals
            .iter()
            .zip(&other.intervals)
            .any(|((x1, y1), (x2, y2))| y1 <= x2 || y2 <= x1)
    }
}

/// An ordered tuple of little cubes of one dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct CubeConfig<S> {
    dim: usize,
    cubes: Vec<LittleCube<S>>,
}

impl<S: Scalar> CubeConfig<S> {
    /// Build a configuration, checking dimensions but not disjointness.
    pub fn new(dim: usize, cubes: Vec<LittleCube<S>>) -> Result<Self, CubeError> {
        if let Some(c) = cubes.iter().find(|c| c.dim() != dim) {
            return Err(CubeError::DimensionMismatch {
                expected: dim,
                found: c.dim(),
            });
        }
        Ok(CubeConfig { dim, cubes })
    }

    /// The operad unit: one cube filling the whole unit cube.
    pub fn identity(dim: usize) -> Self {
        CubeConfig {
            dim,
            cubes: vec![LittleCube::identity(dim)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.cubes.len()
    }

    pub fn cubes(&self) -> &[LittleCube<S>] {
        &self.cubes
    }

    pub fn centers(&self) -> Vec<Vec<S>> {
        self.cubes.iter().map(|c| c.center()).collect()
    }

    /// First overlapping pair, if any.
    pub fn first_overlap(&self) -> Option<(usize, usize)> {
        for i in 0..self.cubes.len() {
            for j in i + 1..self.cubes.len() {
                if !self.cubes[i].disjoint_from(&self.cubes[j]) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

impl CubeConfig<Rational64> {
    pub fn to_f64(&self) -> CubeConfig<f64> {
        CubeConfig {
            dim: self.dim,
            cubes: self
                .cubes
                .iter()
                .map(|c| LittleCube {
                    intervals: c
                        .intervals
                        .iter()
                        .map(|(a, b)| (a.to_f64().unwrap_or(f64::NAN), b.to_f64().unwrap_or(f64::NAN)))
                        .collect(),
                })
                .collect(),
        }
    }
}

pub fn check_disjoint<S: Scalar>(c: &CubeConfig<S>) -> bool {
    c.first_overlap().is_none()
}

/// Operad composition: the cubes of `inners[i]` embedded into cube `i` of `outer`, in order.
pub fn compose_operad<S: Scalar>(
    outer: &CubeConfig<S>,
    inners: &[CubeConfig<S>],
) -> Result<CubeConfig<S>, CubeError> {
    if inners.len() != outer.arity() {
        return Err(CubeError::ArityMismatch {
            outer: outer.arity(),
            inners: inners.len(),
        });
    }
    if let Some(c) = inners.iter().find(|c| c.dim != outer.dim) {
        return Err(CubeError::DimensionMismatch {
            expected: outer.dim,
            found: c.dim,
        });
    }
    let cubes = outer
        .cubes
        .iter()
        .zip(inners)
        .flat_map(|(o, inner)| inner.cubes.iter().map(move |c| o.embed(c)))
        .collect();
    let out = CubeConfig {
        dim: outer.dim,
        cubes,
    };
    match out.first_overlap() {
        Some((first, second)) => Err(CubeError::Overlap { first, second }),
        None => Ok(out),
    }
}

/// The binary multiplication point: two cubes of side `1/5` centered at
/// `(3/10, 1/2, ...)` and `(7/10, 1/2, ...)`.
pub fn point_m(dim: usize) -> CubeConfig<Rational64> {
    let r = Rational64::new;
    let centers = [r(3, 10), r(7, 10)].map(|x| {
        let mut c = vec![r(1, 2); dim];
        c[0] = x;
        c
    });
    let cubes = centers
        .iter()
        .map(|c| LittleCube::centered(c, r(1, 5)).expect("m lies in the unit cube"))
        .collect();
    CubeConfig { dim, cubes }
}
