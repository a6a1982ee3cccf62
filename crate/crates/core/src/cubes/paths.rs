//! Explicit paths and homotopies of cube configurations, evaluated on their centers.
//!
//! Cubes are labelled `a, b, c` in order. Coordinates a formula leaves out are held at `1/2`.
//! Besides the stated formulas there are the boundary paths they are glued along:
//!
//! * `top`: `R1`, then the associator, then `1R`, on `t ∈ [0, 3]`.
//! * `P`: the mirror image of `top` under `y ↦ 1 − y`, i.e. `R˙1 · a · 1R˙`.
//! * `bottom`: the associator, then `R˙` moving `a` past the block `bc`, then the associator.
//!
//! `L`, `B`, `T`, `M` are straight-line homotopies between those paths, `δ` and `γ`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use super::{CubeConfig, CubeError, LittleCube};

pub const DEFAULT_SIDE: f64 = 1.0 / 20.0;

pub(crate) type Pt = [f64; 3];
pub(crate) type Tri = [Pt; 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathId {
    M,
    RaRb,
    Vhat,
    V1V2,
    Delta,
    Gamma,
    H,
    K,
    Phi,
    L,
    B,
    T,
    MLinear,
}

impl PathId {
    pub const ALL: [PathId; 13] = [
        PathId::M,
        PathId::RaRb,
        PathId::Vhat,
        PathId::V1V2,
        PathId::Delta,
        PathId::Gamma,
        PathId::H,
        PathId::K,
        PathId::Phi,
        PathId::L,
        PathId::B,
        PathId::T,
        PathId::MLinear,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PathId::M => "m",
            PathId::RaRb => "Ra_Rb",
            PathId::Vhat => "vhat",
            PathId::V1V2 => "v1_v2",
            PathId::Delta => "delta",
            PathId::Gamma => "gamma",
            PathId::H => "H",
            PathId::K => "K",
            PathId::Phi => "Phi",
            PathId::L => "L",
            PathId::B => "B",
            PathId::T => "T",
            PathId::MLinear => "M",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            PathId::M | PathId::V1V2 => 4,
            _ => 3,
        }
    }

    pub fn arity(self) -> usize {
        match self {
            PathId::M | PathId::RaRb | PathId::Vhat | PathId::V1V2 => 2,
            _ => 3,
        }
    }

    /// Parameter names and ranges, in evaluation order.
    pub fn domain(self) -> &'static [(&'static str, f64, f64)] {
        match self {
            PathId::M => &[],
            PathId::RaRb => &[("t", 0.0, 1.0)],
            PathId::Vhat => &[("t", 0.0, 1.0), ("s", 0.0, 1.0)],
            PathId::V1V2 => &[("r", 0.0, 1.0), ("t", 0.0, 1.0)],
            PathId::Delta | PathId::Gamma => &[("t", 0.0, 3.0)],
            PathId::H | PathId::L | PathId::MLinear => &[("t", 0.0, 3.0), ("s", 1.0, 2.0)],
            PathId::B => &[("t", 0.0, 3.0), ("s", 2.0, 3.0)],
            PathId::T => &[("t", 0.0, 3.0), ("s", 0.0, 1.0)],
            PathId::K => &[("t", 0.0, 3.0), ("s", 0.0, 2.0)],
            PathId::Phi => &[("t", 0.0, 3.0), ("s", 0.0, 2.0), ("u", 0.0, 1.0)],
        }
    }

    /// Raw centers, without domain checks.
    pub(crate) fn centers(self, p: &[f64]) -> Vec<Vec<f64>> {
        match self {
            PathId::M => vec![vec![0.3, 0.5, 0.5, 0.5], vec![0.7, 0.5, 0.5, 0.5]],
            PathId::RaRb => {
                let [a, b] = r_pair(p[0]);
                vec![vec![a[0], a[1], 0.5], vec![b[0], b[1], 0.5]]
            }
            PathId::Vhat => vhat(p[0], p[1]).iter().map(|c| c.to_vec()).collect(),
            PathId::V1V2 => v1_v2(p[0], p[1]).iter().map(|c| c.to_vec()).collect(),
            PathId::Delta => tri_vec(delta(p[0])),
            PathId::Gamma => tri_vec(gamma(p[0])),
            PathId::H => tri_vec(h(p[0], p[1])),
            PathId::K => tri_vec(k(p[0], p[1])),
            PathId::Phi => tri_vec(phi(p[0], p[1], p[2])),
            PathId::L => tri_vec(l(p[0], p[1])),
            PathId::B => tri_vec(b(p[0], p[1])),
            PathId::T => tri_vec(t_hom(p[0], p[1])),
            PathId::MLinear => tri_vec(m_hom(p[0], p[1])),
        }
    }
}

impl fmt::Display for PathId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PathId {
    type Err = CubeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PathId::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| CubeError::UnknownPath(s.to_string()))
    }
}

/// A path id with the side length used for every cube.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NamedPath {
    pub id: PathId,
    pub side: f64,
}

impl NamedPath {
    pub fn new(id: PathId) -> Self {
        NamedPath { id, side: DEFAULT_SIDE }
    }

    pub fn with_side(id: PathId, side: f64) -> Self {
        NamedPath { id, side }
    }

    /// Centers at an in-domain parameter.
    pub fn centers(&self, params: &[f64]) -> Result<Vec<Vec<f64>>, CubeError> {
        let domain = self.id.domain();
        if params.len() != domain.len() {
            return Err(CubeError::ParameterCount {
                expected: domain.len(),
                found: params.len(),
            });
        }
        for (&value, &(name, lo, hi)) in params.iter().zip(domain) {
            if !(lo..=hi).contains(&value) {
                return Err(CubeError::OutOfDomain { name, value, lo, hi });
            }
        }
        Ok(self.id.centers(params))
    }

    pub fn eval(&self, params: &[f64]) -> Result<CubeConfig<f64>, CubeError> {
        let cubes = self
            .centers(params)?
            .iter()
            .map(|c| LittleCube::centered(c, self.side))
            .collect::<Result<Vec<_>, _>>()?;
        CubeConfig::new(self.id.dim(), cubes)
    }
}

fn tri_vec(c: Tri) -> Vec<Vec<f64>> {
    c.iter().map(|p| p.to_vec()).collect()
}

fn lerp(p: f64, q: f64, w: f64) -> f64 {
    p + (q - p) * w
}

fn lerp_tri(p: &Tri, q: &Tri, w: f64) -> Tri {
    std::array::from_fn(|i| std::array::from_fn(|j| lerp(p[i][j], q[i][j], w)))
}

pub(crate) fn reflect(c: &Tri) -> Tri {
    c.map(|[x, y, z]| [x, 1.0 - y, z])
}

/// `(R_a(t), R_b(t))` in the plane.
pub(crate) fn r_pair(t: f64) -> [[f64; 2]; 2] {
    let a = PI + PI * t;
    let b = PI * t;
    [
        [0.5 + 0.2 * a.cos(), 0.5 + 0.2 * a.sin()],
        [0.5 + 0.2 * b.cos(), 0.5 + 0.2 * b.sin()],
    ]
}

pub(crate) fn vhat(t: f64, s: f64) -> [[f64; 3]; 2] {
    let (a, b) = (PI + PI * t, PI * t);
    let w = 1.0 - 2.0 * s;
    let lift = 0.25 * (PI * s).sin();
    [
        [0.5 + 0.2 * a.cos(), 0.5 + 0.2 * w * a.sin(), 0.5 + lift],
        [0.5 + 0.2 * b.cos(), 0.5 + 0.2 * w * b.sin(), 0.5 - lift],
    ]
}

pub(crate) fn v1_v2(r: f64, t: f64) -> [[f64; 4]; 2] {
    let (a, b) = (PI + 2.0 * PI * t, 2.0 * PI * t);
    let h = 0.2 * (1.0 - r * r).max(0.0).sqrt();
    [
        [0.5 + r / 5.0 * a.cos(), 0.5 + r / 5.0 * a.sin(), 0.5 + h, 0.5],
        [0.5 + r / 5.0 * b.cos(), 0.5 + r / 5.0 * b.sin(), 0.5 - h, 0.5],
    ]
}

pub(crate) fn delta(t: f64) -> Tri {
    let th = PI * t / 3.0;
    [
        [0.5 + 0.24 * (PI + th).cos(), 0.5 + 0.24 * (PI - th).sin(), 0.5],
        [0.32 + 0.02 * th.cos(), 0.5 + 0.02 * (-th).sin(), 0.5],
        [0.68 + 0.02 * th.cos(), 0.5 + 0.02 * (-th).sin(), 0.5],
    ]
}

pub(crate) fn gamma(t: f64) -> Tri {
    let th = PI * t / 3.0;
    [
        [0.5 + 0.24 * (PI + th).cos(), 0.5 + 0.24 * (PI + th).sin(), 0.5],
        [0.32 + 0.02 * th.cos(), 0.5 + 0.02 * th.sin(), 0.5],
        [0.68 + 0.02 * th.cos(), 0.5 + 0.02 * th.sin(), 0.5],
    ]
}

pub(crate) fn h(t: f64, s: f64) -> Tri {
    let th = PI * t / 3.0;
    let w = 3.0 - 2.0 * s;
    let lift = 0.25 * (PI * (s - 1.0)).sin();
    [
        [0.5 + 0.24 * (PI + th).cos(), 0.5 + 0.24 * w * (PI + th).sin(), 0.5 + lift],
        [0.32 + 0.02 * th.cos(), 0.5 + 0.02 * w * th.sin(), 0.5 - lift],
        [0.68 + 0.02 * th.cos(), 0.5 + 0.02 * w * th.sin(), 0.5 - lift],
    ]
}

/// `R` scaled by `1/5` into a cube of `m` centered at `(cx, 1/2)`.
fn r_in_cube(t: f64, cx: f64) -> [Pt; 2] {
    r_pair(t).map(|[x, y]| [cx + (x - 0.5) / 5.0, 0.5 + (y - 0.5) / 5.0, 0.5])
}

fn on_line(x: f64) -> Pt {
    [x, 0.5, 0.5]
}

/// `R1 · a · 1R`
pub(crate) fn top(t: f64) -> Tri {
    if t <= 1.0 {
        let [a, b] = r_in_cube(t, 0.3);
        [a, b, on_line(0.7)]
    } else if t <= 2.0 {
        let w = t - 1.0;
        [on_line(lerp(0.34, 0.66, w)), on_line(lerp(0.26, 0.30, w)), on_line(lerp(0.70, 0.74, w))]
    } else {
        let [a, c] = r_in_cube(t - 2.0, 0.7);
        [a, on_line(0.3), c]
    }
}

/// `R˙1 · a · 1R˙`
pub(crate) fn top_reflected(t: f64) -> Tri {
    reflect(&top(t))
}

/// `a · R˙ · a`
pub(crate) fn bottom(t: f64) -> Tri {
    if t <= 1.0 {
        [on_line(lerp(0.26, 0.30, t)), on_line(lerp(0.34, 0.66, t)), on_line(lerp(0.70, 0.74, t))]
    } else if t <= 2.0 {
        let [[ax, ay], [qx, qy]] = r_pair(t - 1.0);
        let (ay, qy) = (1.0 - ay, 1.0 - qy);
        [[ax, ay, 0.5], [qx - 0.04, qy, 0.5], [qx + 0.04, qy, 0.5]]
    } else {
        let w = t - 2.0;
        [on_line(lerp(0.70, 0.74, w)), on_line(lerp(0.26, 0.30, w)), on_line(lerp(0.34, 0.66, w))]
    }
}

/// From `R˙1 · a · 1R˙` at `s = 1` to `δ` at `s = 2`.
pub(crate) fn l(t: f64, s: f64) -> Tri {
    lerp_tri(&top_reflected(t), &delta(t), s - 1.0)
}

/// From `δ` at `s = 2` to `a · R˙ · a` at `s = 3`.
pub(crate) fn b(t: f64, s: f64) -> Tri {
    lerp_tri(&delta(t), &bottom(t), s - 2.0)
}

/// From `R1 · a · 1R` at `s = 0` to `γ` at `s = 1`.
pub(crate) fn t_hom(t: f64, s: f64) -> Tri {
    lerp_tri(&top(t), &gamma(t), s)
}

/// From `γ` at `s = 1` to `a · R · a` at `s = 2`.
pub(crate) fn m_hom(t: f64, s: f64) -> Tri {
    lerp_tri(&gamma(t), &reflect(&bottom(t)), s - 1.0)
}

fn signed_lift(amount: f64) -> [f64; 3] {
    [0.5 + amount, 0.5 - amount, 0.5 - amount]
}

pub(crate) fn k(t: f64, s: f64) -> Tri {
    let lv = l(t, s / 2.0 + 1.0);
    let z = signed_lift(0.25 * (PI * s / 2.0).sin());
    std::array::from_fn(|i| [lv[i][0], (1.0 - s / 2.0) + (s - 1.0) * lv[i][1], z[i]])
}

pub(crate) fn phi_lower(t: f64, s: f64, u: f64) -> Tri {
    let lv = l(t, s * u / 2.0 + 1.0);
    let z = signed_lift(0.25 * (PI * s * (1.0 - u / 2.0)).sin());
    std::array::from_fn(|i| {
        [
            lv[i][0],
            1.0 - s * (1.0 - u / 2.0) + (s * (2.0 - u) - 1.0) * lv[i][1],
            z[i],
        ]
    })
}

pub(crate) fn phi_upper(t: f64, s: f64, u: f64) -> Tri {
    let lv = l(t, s + (1.0 - s / 2.0) * u);
    let z = signed_lift(0.25 * (PI * s * u / 2.0).sin());
    std::array::from_fn(|i| {
        [
            lv[i][0],
            (1.0 - s / 2.0) * u + ((s - 2.0) * u + 1.0) * lv[i][1],
            z[i],
        ]
    })
}

pub(crate) fn phi(t: f64, s: f64, u: f64) -> Tri {
    if s <= 1.0 {
        phi_lower(t, s, u)
    } else {
        phi_upper(t, s, u)
    }
}

/// The face of `Φ` at `u = 0`, `s ∈ [0, 1]`: `top` with its second coordinate flipped through
/// the third, as `v̂` does for `R`.
pub(crate) fn upper_row(t: f64, s: f64) -> Tri {
    let tp = top(t);
    let z = signed_lift(0.25 * (PI * s).sin());
    std::array::from_fn(|i| [tp[i][0], 0.5 + (1.0 - 2.0 * s) * (tp[i][1] - 0.5), z[i]])
}
